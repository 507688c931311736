//! Shared fixtures and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use tpkit::complex::{Graph, LinkGraph};
use tpkit::generators::*;
use tpkit::{build_tp_complex, CellComplex, SimplicialComplex2D, TPComplex};

pub const CORPUS_SEEDS: std::ops::RangeInclusive<u64> = 1..=100;
pub const CORPUS_CELLS: usize = 60;

pub struct Instance {
    pub name: String,
    pub x: TPComplex,
}

/// 100 random discs, the four configurations, and tiling patches.
pub fn corpus() -> Vec<Instance> {
    let mut out: Vec<Instance> = CORPUS_SEEDS
        .map(|seed| Instance {
            name: format!("random seed {seed}"),
            x: gen_random_cat0_disc(&GeneratorSpec::random(seed, CORPUS_CELLS, Bias::HALF)).expect("corpus disc"),
        })
        .collect();
    out.extend(presets());
    for r in 1..=3 {
        out.push(Instance { name: format!("pentagon tiling r{r}"), x: gen_pentagon_tiling(r).unwrap() });
        out.push(Instance { name: format!("triangle tiling r{r}"), x: gen_triangle_tiling(r).unwrap() });
    }
    out
}

pub fn presets() -> Vec<Instance> {
    [
        ("star4", gen_star4_pentagons()),
        ("fan3", gen_fan3_pentagons_triangle()),
        ("fan2", gen_fan2_pentagons_3triangles()),
        ("fan1", gen_fan1_pentagon_5triangles()),
    ]
    .into_iter()
    .map(|(n, x)| Instance { name: n.to_string(), x })
    .collect()
}

/// Subdivision written out by hand: pentagon `i` gets center `n + i`, unvalidated.
pub fn raw_star(n: usize, triangles: &[[usize; 3]], pentagons: &[[usize; 5]]) -> SimplicialComplex2D {
    let mut tris = triangles.to_vec();
    let mut centers = Vec::new();
    for (i, p) in pentagons.iter().enumerate() {
        let c = n + i;
        centers.push(c);
        for k in 0..5 {
            tris.push([c, p[k], p[(k + 1) % 5]]);
        }
    }
    SimplicialComplex2D::from_raw(n + pentagons.len(), &tris, &centers).expect("raw star")
}

/// One quoted angle sum and a configuration realizing it at vertex 0.
pub struct AngleCase {
    pub source: &'static str,
    pub units: u32,
    /// Quoted value as a reduced fraction of π.
    pub fraction: (u32, u32),
    pub vertex_count: usize,
    pub triangles: Vec<[usize; 3]>,
    pub pentagons: Vec<[usize; 5]>,
}

impl AngleCase {
    pub fn star(&self) -> SimplicialComplex2D {
        raw_star(self.vertex_count, &self.triangles, &self.pentagons)
    }

    /// The configuration as a triangle-pentagon complex, if it is one.
    pub fn tp(&self) -> Option<TPComplex> {
        build_tp_complex(self.vertex_count, &self.triangles, &self.pentagons).ok()
    }
}

const P: [usize; 5] = [0, 1, 2, 3, 4];

fn case(source: &'static str, units: u32, fraction: (u32, u32), n: usize, t: &[[usize; 3]], p: &[[usize; 5]]) -> AngleCase {
    AngleCase { source, units, fraction, vertex_count: n, triangles: t.to_vec(), pentagons: p.to_vec() }
}

/// Every quoted angle sum, each with its configuration at vertex 0.
pub fn angle_cases() -> Vec<AngleCase> {
    let pent_fan = |k: usize| -> (usize, Vec<[usize; 3]>) {
        // pentagon corner at 0 closed by k triangles along 4 ~ 5 ~ .. ~ 1
        let mut rim: Vec<usize> = vec![4];
        rim.extend(5..4 + k);
        rim.push(1);
        (4 + k, rim.windows(2).map(|w| [0, w[0], w[1]]).collect())
    };
    let tri_fan = |k: usize| -> Vec<[usize; 3]> { (1..=k).map(|i| [0, i, i % k + 1]).collect() };
    let (n1, t1) = pent_fan(1);
    let (n2, t2) = pent_fan(2);
    let (n3, t3) = pent_fan(3);
    let (n4, t4) = pent_fan(4);
    let (n5, t5) = pent_fan(5);
    let two = [[0, 1, 2, 3, 4], [0, 4, 5, 6, 7]];
    vec![
        case("largeness 3-large pentagon corner", 28, (14, 15), n1, &t1, &[P]),
        case("largeness 3-large triangles", 30, (1, 1), 4, &tri_fan(3), &[]),
        case("largeness 4-large pentagon corner", 38, (19, 15), n2, &t2, &[P]),
        case("largeness 4-large triangles", 40, (4, 3), 5, &tri_fan(4), &[]),
        case("location 5-large pentagon corner", 48, (8, 5), n3, &t3, &[P]),
        case("location 5-large triangles", 50, (5, 3), 6, &tri_fan(5), &[]),
        case("location 6-large pentagon corner", 58, (29, 15), n4, &t4, &[P]),
        case("location 5-large neighbour of a center", 48, (8, 5), n3, &t3, &[P]),
        case("location 6-large neighbour of a center", 58, (29, 15), n4, &t4, &[P]),
        case("girth four pentagons", 72, (12, 5), 13, &[], gen_star4_pentagons().pentagons()),
        case("girth three pentagons, v1 = v10", 54, (9, 5), 10, &[], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 7], [0, 7, 8, 9, 1]]),
        case("girth three pentagons, v1 ~ v10", 64, (32, 15), 11, &[[0, 10, 1]], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 7], [0, 7, 8, 9, 10]]),
        case("girth two pentagons, v1 = v7", 36, (6, 5), 7, &[], &[[0, 1, 2, 3, 4], [0, 4, 5, 6, 1]]),
        case("girth two pentagons, d = 1", 46, (23, 15), 8, &[[0, 7, 1]], &two),
        case("girth two pentagons, d = 2", 56, (28, 15), 9, &[[0, 7, 8], [0, 8, 1]], &two),
        case("girth two pentagons, d = 3", 66, (11, 5), 10, &[[0, 7, 8], [0, 8, 9], [0, 9, 1]], &two),
        case("girth one pentagon, d = 1", 28, (14, 15), n1, &t1, &[P]),
        case("girth one pentagon, d = 2", 38, (19, 15), n2, &t2, &[P]),
        case("girth one pentagon, d = 3", 48, (8, 5), n3, &t3, &[P]),
        case("girth one pentagon, d = 4", 58, (29, 15), n4, &t4, &[P]),
        case("girth one pentagon, d = 5", 68, (34, 15), n5, &t5, &[P]),
    ]
}

/// The hand-built pair of adjacent 5-wheels: a pentagon corner closed by three triangles.
pub fn adjacent_five_wheels() -> SimplicialComplex2D {
    tpkit::subdivide(&build_tp_complex(7, &[[0, 4, 5], [0, 5, 6], [0, 1, 6]], &[P]).unwrap()).unwrap()
}

/// A 5-wheel next to a 6-wheel: a pentagon corner closed by four triangles.
pub fn five_six_wheels() -> SimplicialComplex2D {
    tpkit::subdivide(&build_tp_complex(8, &[[0, 4, 5], [0, 5, 6], [0, 6, 7], [0, 1, 7]], &[P]).unwrap()).unwrap()
}

// ---- oracles ----

/// Vertex sets inducing a cycle of length 3..=max_len, by checking every subset.
pub fn brute_induced_cycles(g: &Graph, max_len: usize) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    assert!(n <= 16, "subset oracle is exponential");
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.len() < 3 || set.len() > max_len {
            continue;
        }
        let degree_two = set.iter().all(|&v| set.iter().filter(|&&u| g.has_edge(u, v)).count() == 2);
        if degree_two && connected_within(g, &set) {
            out.insert(set);
        }
    }
    out
}

fn connected_within(g: &Graph, set: &[usize]) -> bool {
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut seen = BTreeSet::from([set[0]]);
    let mut stack = vec![set[0]];
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if inside.contains(&u) && seen.insert(u) {
                stack.push(u);
            }
        }
    }
    seen.len() == set.len()
}

/// Minimum total weight over all simple cycles of a link, by exhaustive search.
pub fn brute_min_cycle_weight(link: &LinkGraph) -> Option<u32> {
    let n = link.nodes.len();
    assert!(n <= 12);
    let idx = |v: usize| link.nodes.iter().position(|&x| x == v).unwrap();
    let mut w = vec![vec![None::<u32>; n]; n];
    for e in &link.edges {
        let (a, b) = (idx(e.a), idx(e.b));
        w[a][b] = Some(e.weight.units());
        w[b][a] = Some(e.weight.units());
    }
    let mut best = None;
    // cycles through `start` as their smallest node
    fn walk(w: &[Vec<Option<u32>>], start: usize, path: &mut Vec<usize>, acc: u32, best: &mut Option<u32>) {
        let last = *path.last().unwrap();
        for next in 0..w.len() {
            let Some(wt) = w[last][next] else { continue };
            if next == start && path.len() >= 3 {
                let total = acc + wt;
                if best.is_none_or(|b| total < b) {
                    *best = Some(total);
                }
            } else if next > start && !path.contains(&next) {
                path.push(next);
                walk(w, start, path, acc + wt, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        walk(&w, s, &mut vec![s], 0, &mut best);
    }
    best
}

/// Wheels of a flag complex by subset search: hub plus a vertex set of its
/// neighbourhood inducing a cycle of length ≥ 4. Keyed by hub, rim as a sorted set.
pub fn brute_wheels(x: &SimplicialComplex2D) -> Vec<(usize, BTreeSet<usize>)> {
    let g = x.skeleton();
    let mut out = Vec::new();
    for h in 0..x.vertex_count() {
        let nb = g.neighbors(h);
        let local = Graph::from_edges(
            nb.len(),
            (0..nb.len()).flat_map(|i| (i + 1..nb.len()).map(move |j| (i, j))).filter(|&(i, j)| g.has_edge(nb[i], nb[j])),
        );
        for set in brute_induced_cycles(&local, nb.len()) {
            if set.len() >= 4 {
                out.push((h, set.iter().map(|&i| nb[i]).collect()));
            }
        }
    }
    out
}

/// Orbit key of a dwheel: unordered hub pair, kind, and the three shared rim vertices.
pub type DwheelKey = (BTreeSet<usize>, bool, BTreeSet<usize>, usize);

/// Dwheels by pairing every two wheels whose hubs lie on each other's rims.
///
/// With `N1` the rim neighbours of `h2` on rim 1 and `N2` those of `h1` on rim 2:
/// for each `v3` in both and the remaining `v1 ∈ N1`, `w1 ∈ N2`, the pair is planar
/// when `v1 = w1` and nonplanar when `v1 ~ w1`.
pub fn brute_dwheels(x: &SimplicialComplex2D, max_boundary: usize) -> BTreeSet<(DwheelKey, BTreeSet<usize>, BTreeSet<usize>)> {
    let g = x.skeleton();
    let wheels = brute_wheels(x);
    let rim_neighbours =
        |rim: &BTreeSet<usize>, v: usize| -> Vec<usize> { rim.iter().copied().filter(|&u| u != v && g.has_edge(u, v)).collect() };
    let mut out = BTreeSet::new();
    for (i, (h1, r1)) in wheels.iter().enumerate() {
        for (h2, r2) in wheels.iter().skip(i + 1) {
            if h1 == h2 || !r1.contains(h2) || !r2.contains(h1) {
                continue;
            }
            let n1 = rim_neighbours(r1, *h2);
            let n2 = rim_neighbours(r2, *h1);
            assert_eq!((n1.len(), n2.len()), (2, 2), "rims are induced cycles");
            for &v3 in n1.iter().filter(|v| n2.contains(v)) {
                let v1 = *n1.iter().find(|&&u| u != v3).unwrap();
                let w1 = *n2.iter().find(|&&u| u != v3).unwrap();
                let (k, l) = (r1.len(), r2.len());
                let (planar, boundary) = if v1 == w1 {
                    (true, k + l - 4)
                } else if g.has_edge(v1, w1) {
                    (false, k + l - 3)
                } else {
                    continue;
                };
                if boundary <= max_boundary {
                    let key = (BTreeSet::from([*h1, *h2]), planar, BTreeSet::from([v1, v3, w1]), boundary);
                    let (ra, rb) = if h1 < h2 { (r1, r2) } else { (r2, r1) };
                    out.insert((key, ra.clone(), rb.clone()));
                }
            }
        }
    }
    out
}

/// Per-vertex count of incident cells of each kind.
pub fn cell_kinds_at(x: &TPComplex) -> BTreeMap<usize, (usize, usize)> {
    let mut m = BTreeMap::new();
    for t in x.triangles() {
        for &v in t {
            m.entry(v).or_insert((0, 0)).0 += 1;
        }
    }
    for p in x.pentagons() {
        for &v in p {
            m.entry(v).or_insert((0, 0)).1 += 1;
        }
    }
    m
}

/// Clique complex of a graph: all its triangles become 2-cells.
pub fn clique_complex(n: usize, edges: &[(usize, usize)]) -> SimplicialComplex2D {
    let g = Graph::from_edges(n, edges.iter().copied());
    let mut tris = Vec::new();
    for a in 0..n {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > b) {
                if g.has_edge(a, c) {
                    tris.push([a, b, c]);
                }
            }
        }
    }
    SimplicialComplex2D::from_raw(n, &tris, &[]).unwrap()
}

/// Drops edges until the graph has no 4-clique, so its clique complex is flag and 2-dimensional.
pub fn k4_free(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut kept: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in edges {
        if a == b {
            continue;
        }
        let e = (a.min(b), a.max(b));
        if kept.contains(&e) {
            continue;
        }
        kept.push(e);
        let g = Graph::from_edges(n, kept.iter().copied());
        let common: Vec<usize> = g.neighbors(e.0).iter().copied().filter(|&c| g.has_edge(c, e.1)).collect();
        let makes_k4 = common.iter().any(|&c| common.iter().any(|&d| c < d && g.has_edge(c, d)));
        if makes_k4 {
            kept.pop();
        }
    }
    kept
}
