//! Disc patches of the order-4 pentagonal tiling and of the flat triangular lattice.

use std::collections::BTreeMap;

use super::presets::gen_star4_pentagons;
use super::GenerateError;
use crate::complex::{build_tp_complex, TPComplex};

pub const MAX_PENTAGON_RADIUS: usize = 4;
pub const MAX_TRIANGLE_RADIUS: usize = 40;

/// Vertex-centered patch of the order-4 pentagonal tiling: `radius` rings of pentagons.
///
/// Radius 1 is the four-pentagon star. Each further ring completes every current
/// boundary vertex to four pentagons.
pub fn gen_pentagon_tiling(radius: usize) -> Result<TPComplex, GenerateError> {
    check_radius(radius, MAX_PENTAGON_RADIUS)?;
    let star = gen_star4_pentagons();
    let mut pentagons: Vec<[usize; 5]> = star.pentagons().to_vec();
    let mut vertex_count = star.vertex_count();
    let mut boundary: Vec<usize> = (1..=12).collect();
    let mut count = vec![0usize; vertex_count];
    for p in &pentagons {
        for &v in p {
            count[v] += 1;
        }
    }

    for _ in 1..radius {
        let n = boundary.len();
        let mut fresh = |count: &mut Vec<usize>| {
            count.push(0);
            vertex_count += 1;
            vertex_count - 1
        };
        // spokes[i]: new edges out of boundary[i], ordered from the boundary[i-1] side
        let spokes: Vec<Vec<usize>> = boundary
            .iter()
            .map(|&b| {
                let deficit = 4 - count[b];
                assert!(deficit >= 2, "boundary vertex {b} already has {} pentagons", count[b]);
                (0..deficit - 1).map(|_| fresh(&mut count)).collect()
            })
            .collect();
        let mut next_boundary = Vec::new();
        let mut new_cells = Vec::new();
        for i in 0..n {
            let b = boundary[i];
            let s = &spokes[i];
            for j in 0..s.len() - 1 {
                let (x, y) = (fresh(&mut count), fresh(&mut count));
                new_cells.push([b, s[j], x, y, s[j + 1]]);
                next_boundary.extend([s[j], x, y]);
            }
            let last = *s.last().expect("at least one spoke");
            let m = fresh(&mut count);
            let (b_next, s_next) = (boundary[(i + 1) % n], spokes[(i + 1) % n][0]);
            new_cells.push([b, b_next, s_next, m, last]);
            next_boundary.extend([last, m]);
        }
        for p in &new_cells {
            for &v in p {
                count[v] += 1;
            }
        }
        pentagons.extend(new_cells);
        boundary = next_boundary;
    }
    build_tp_complex(vertex_count, &[], &pentagons).map_err(GenerateError::Invalid)
}

/// Hexagonal patch of the triangular lattice with `radius` rings around vertex 0.
pub fn gen_triangle_tiling(radius: usize) -> Result<TPComplex, GenerateError> {
    check_radius(radius, MAX_TRIANGLE_RADIUS)?;
    let r = radius as i64;
    let ring = |q: i64, s: i64| q.abs().max(s.abs()).max((q + s).abs());
    let mut points: Vec<(i64, i64)> =
        (-r..=r).flat_map(|q| (-r..=r).map(move |s| (q, s))).filter(|&(q, s)| ring(q, s) <= r).collect();
    points.sort_by_key(|&(q, s)| (ring(q, s), q, s));
    let index: BTreeMap<(i64, i64), usize> = points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut triangles = Vec::new();
    // anchors may sit just outside the patch while the triangle lies inside it
    for (q, s) in (-r - 1..=r).flat_map(|q| (-r - 1..=r).map(move |s| (q, s))) {
        for tri in [[(q, s), (q + 1, s), (q, s + 1)], [(q + 1, s), (q, s + 1), (q + 1, s + 1)]] {
            if let [Some(&a), Some(&b), Some(&c)] = tri.map(|p| index.get(&p)) {
                triangles.push([a, b, c]);
            }
        }
    }
    build_tp_complex(points.len(), &triangles, &[]).map_err(GenerateError::Invalid)
}

fn check_radius(radius: usize, max: usize) -> Result<(), GenerateError> {
    if radius == 0 {
        return Err(GenerateError::InvalidParameter("radius must be at least 1".into()));
    }
    if radius > max {
        return Err(GenerateError::RadiusTooLarge { radius, max });
    }
    Ok(())
}
