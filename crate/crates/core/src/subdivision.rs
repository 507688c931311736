//! Star subdivision of a triangle-pentagon complex: every pentagon becomes a 5-wheel.

use std::collections::BTreeSet;

use crate::complex::{SimplicialComplex2D, TPComplex, VertexOrigin};
use crate::error::{check_index, Result, TopologyError};

/// Adds a center to every pentagon and cones the pentagon boundary to it.
///
/// Centers get indices `vertex_count, vertex_count + 1, ...` in pentagon order.
/// A non-flag result is an error rather than a silently accepted complex.
pub fn subdivide(tp: &TPComplex) -> Result<SimplicialComplex2D> {
    let n = tp.vertex_count();
    let mut triangles: Vec<[usize; 3]> = tp.triangles().to_vec();
    let mut centers = Vec::with_capacity(tp.pentagons().len());
    for (i, p) in tp.pentagons().iter().enumerate() {
        let c = n + i;
        centers.push(c);
        for k in 0..5 {
            triangles.push([c, p[k], p[(k + 1) % 5]]);
        }
    }
    let x = SimplicialComplex2D::from_raw(n + centers.len(), &triangles, &centers)?;
    if let Some(clique) = x.flag_violation() {
        return Err(TopologyError::FlagViolation { clique });
    }
    Ok(x)
}

/// The pentagon centers of a subdivided complex.
pub fn center_vertices(x_star: &SimplicialComplex2D) -> BTreeSet<usize> {
    x_star.center_of().iter().copied().collect()
}

pub fn is_center(x_star: &SimplicialComplex2D, v: usize) -> Result<bool> {
    check_index(v, crate::complex::CellComplex::vertex_count(x_star))?;
    Ok(x_star.vertex_origin(v)? == VertexOrigin::Center)
}
