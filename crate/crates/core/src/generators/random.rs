//! Seeded boundary growth of CAT(0) triangle-pentagon discs.
//!
//! The disc keeps an oriented boundary cycle. Each step takes a boundary vertex of
//! largest angle and either closes it (gluing one cell across its two boundary edges,
//! which makes it interior) or grows a fresh cell on one of its boundary edges. A vertex
//! is closed only once its final angle reaches a full turn, so every interior vertex
//! satisfies the link condition. Every step is revalidated as a triangle-pentagon
//! complex; a rejected close falls back to growing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{GenerateError, GeneratorSpec};
use crate::angle::AngleWeight;
use crate::complex::{build_tp_complex, TPComplex};
use crate::curvature::is_cat0_disc;

/// Default number of attempted moves.
pub const DEFAULT_BUDGET: usize = 100_000;

/// Whether a boundary vertex with angle `angle_before` may be closed by a cell with `corner`.
pub fn can_close(angle_before: AngleWeight, corner: AngleWeight) -> bool {
    angle_before + corner >= AngleWeight::FULL_TURN
}

#[derive(Clone, Copy, Debug)]
enum Move {
    Close,
    /// Grow on the edge after the vertex (`true`) or before it.
    Attach { forward: bool },
}

#[derive(Clone, Debug)]
struct Growth {
    triangles: Vec<[usize; 3]>,
    pentagons: Vec<[usize; 5]>,
    boundary: Vec<usize>,
    angle: Vec<AngleWeight>,
}

fn corner(pentagon: bool) -> AngleWeight {
    if pentagon {
        AngleWeight::PENTAGON
    } else {
        AngleWeight::EQUILATERAL
    }
}

impl Growth {
    fn start(pentagon: bool) -> Self {
        let mut g = Growth { triangles: vec![], pentagons: vec![], boundary: vec![], angle: vec![] };
        if pentagon {
            let p = [0, 1, 2, 3, 4].map(|_| g.fresh());
            g.pentagons.push(p);
            g.boundary = p.to_vec();
        } else {
            let t = [0, 1, 2].map(|_| g.fresh());
            g.triangles.push(t);
            g.boundary = t.to_vec();
        }
        for v in g.boundary.clone() {
            g.angle[v] = corner(pentagon);
        }
        g
    }

    fn cells(&self) -> usize {
        self.triangles.len() + self.pentagons.len()
    }

    fn fresh(&mut self) -> usize {
        self.angle.push(AngleWeight::ZERO);
        self.angle.len() - 1
    }

    fn add_triangle(&mut self, t: [usize; 3]) {
        t.iter().for_each(|&v| self.angle[v] += AngleWeight::EQUILATERAL);
        self.triangles.push(t);
    }

    fn add_pentagon(&mut self, p: [usize; 5]) {
        p.iter().for_each(|&v| self.angle[v] += AngleWeight::PENTAGON);
        self.pentagons.push(p);
    }

    /// The disc after applying `mv` at boundary position `pos`, if it is still valid.
    fn apply(&self, pos: usize, mv: Move, pentagon: bool) -> Option<(Growth, TPComplex)> {
        let n = self.boundary.len();
        let (a, b, c) = (self.boundary[(pos + n - 1) % n], self.boundary[pos], self.boundary[(pos + 1) % n]);
        let mut g = self.clone();
        match (mv, pentagon) {
            (Move::Close, false) => {
                if n < 4 {
                    return None;
                }
                g.add_triangle([a, b, c]);
                g.boundary.remove(pos);
            }
            (Move::Close, true) => {
                let (x, y) = (g.fresh(), g.fresh());
                g.add_pentagon([a, b, c, x, y]);
                g.boundary.splice(pos..=pos, [y, x]);
            }
            (Move::Attach { forward }, false) => {
                let x = g.fresh();
                let (s, t, at) = if forward { (b, c, pos + 1) } else { (a, b, pos) };
                g.add_triangle([s, t, x]);
                g.boundary.insert(at, x);
            }
            (Move::Attach { forward }, true) => {
                let (x, y, z) = (g.fresh(), g.fresh(), g.fresh());
                let (s, t, at) = if forward { (b, c, pos + 1) } else { (a, b, pos) };
                // cycle s t z y x, so the new boundary runs s x y z t
                g.add_pentagon([s, t, z, y, x]);
                g.boundary.splice(at..at, [x, y, z]);
            }
        }
        let x = build_tp_complex(g.angle.len(), &g.triangles, &g.pentagons).ok()?;
        Some((g, x))
    }
}

/// Random CAT(0) disc with at least `spec.target_cells` cells, fully determined by the spec.
pub fn gen_random_cat0_disc(spec: &GeneratorSpec) -> Result<TPComplex, GenerateError> {
    if spec.target_cells == 0 {
        return Err(GenerateError::InvalidParameter("target cell count must be at least 1".into()));
    }
    let bias = spec.pentagon_bias;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let pick = |rng: &mut ChaCha8Rng| rng.gen_ratio(bias.numerator(), bias.denominator());

    let first = pick(&mut rng);
    let mut growth = Growth::start(first);
    let mut complex = build_tp_complex(growth.angle.len(), &growth.triangles, &growth.pentagons)
        .map_err(GenerateError::Invalid)?;
    let mut attempts = 0usize;

    while growth.cells() < spec.target_cells {
        let top = growth.boundary.iter().map(|&v| growth.angle[v]).max().expect("boundary is never empty");
        let ties: Vec<usize> = (0..growth.boundary.len()).filter(|&i| growth.angle[growth.boundary[i]] == top).collect();
        let pos = ties[rng.gen_range(0..ties.len())];
        let pentagon = pick(&mut rng);
        let forward = rng.gen_bool(0.5);

        let mut moves = Vec::with_capacity(3);
        if can_close(top, corner(pentagon)) {
            moves.push(Move::Close);
        }
        moves.push(Move::Attach { forward });
        moves.push(Move::Attach { forward: !forward });

        let mut applied = false;
        for mv in moves {
            attempts += 1;
            if attempts > spec.budget {
                return Err(GenerateError::GenerationBudgetExceeded {
                    budget: spec.budget,
                    cells: growth.cells(),
                    vertex_count: growth.angle.len(),
                    boundary_length: growth.boundary.len(),
                });
            }
            if let Some((g, x)) = growth.apply(pos, mv, pentagon) {
                growth = g;
                complex = x;
                applied = true;
                break;
            }
        }
        debug_assert!(applied, "growing a fresh cell on a boundary edge is always valid");
    }

    let verdict = is_cat0_disc(&complex);
    if !verdict.passed() {
        return Err(GenerateError::Postcondition(format!("{:?}", verdict.reasons)));
    }
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::super::{Bias, GeneratorSpec};
    use super::*;

    #[test]
    fn same_seed_same_complex() {
        let spec = GeneratorSpec::random(1, 50, Bias::HALF);
        assert_eq!(gen_random_cat0_disc(&spec).unwrap(), gen_random_cat0_disc(&spec).unwrap());
    }

    #[test]
    fn zero_bias_gives_triangles_only() {
        let x = gen_random_cat0_disc(&GeneratorSpec::random(3, 40, Bias::ZERO)).unwrap();
        assert!(x.pentagons().is_empty());
        assert!(x.triangles().len() >= 40);
    }

    #[test]
    fn full_bias_gives_pentagons_only() {
        let x = gen_random_cat0_disc(&GeneratorSpec::random(3, 30, Bias::ONE)).unwrap();
        assert!(x.triangles().is_empty());
    }

    #[test]
    fn closure_threshold() {
        let u = AngleWeight::from_units;
        assert!(can_close(u(50), AngleWeight::EQUILATERAL));
        assert!(!can_close(u(48), AngleWeight::EQUILATERAL));
        assert!(can_close(u(42), AngleWeight::PENTAGON));
        assert!(!can_close(u(40), AngleWeight::PENTAGON));
    }

    #[test]
    fn tiny_budget_reports_partial_state() {
        let spec = GeneratorSpec { budget: 3, ..GeneratorSpec::random(1, 60, Bias::HALF) };
        match gen_random_cat0_disc(&spec) {
            Err(GenerateError::GenerationBudgetExceeded { budget: 3, cells, .. }) => assert!(cells >= 1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
