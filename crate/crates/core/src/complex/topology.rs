//! Euler characteristic, boundary and interior of a complex.

use std::collections::{BTreeMap, BTreeSet};

use super::cycle::VertexCycle;
use super::link::link_of;
use super::CellComplex;
use crate::error::{Result, TopologyError};

/// V − E + F, counting each pentagon as a single face.
pub fn euler_characteristic<C: CellComplex + ?Sized>(complex: &C) -> i64 {
    complex.vertex_count() as i64 - complex.edge_count() as i64 + complex.cells().len() as i64
}

/// Number of two-cells on each edge. Fails if some edge lies in three or more.
pub fn edge_cell_counts<C: CellComplex + ?Sized>(complex: &C) -> Result<BTreeMap<(usize, usize), usize>> {
    let mut counts: BTreeMap<(usize, usize), usize> = complex.skeleton().edges().map(|e| (e, 0)).collect();
    for cell in complex.cells() {
        for e in cell.edges() {
            *counts.entry(e).or_default() += 1;
        }
    }
    if let Some((&edge, &cells)) = counts.iter().find(|(_, &n)| n >= 3) {
        return Err(TopologyError::NonManifoldEdge { edge, cells });
    }
    Ok(counts)
}

/// Edges lying in fewer than two two-cells, ascending.
pub fn boundary_edges<C: CellComplex + ?Sized>(complex: &C) -> Result<Vec<(usize, usize)>> {
    Ok(edge_cell_counts(complex)?.into_iter().filter(|&(_, n)| n < 2).map(|(e, _)| e).collect())
}

/// The boundary, traced as closed cycles, sorted.
///
/// At each boundary vertex the walk continues along the link path it arrived on, so
/// pinched boundaries are separated correctly; a walk that revisits a vertex is
/// reported as [`TopologyError::NonManifoldVertex`].
pub fn boundary_cycles<C: CellComplex + ?Sized>(complex: &C) -> Result<Vec<VertexCycle>> {
    let edges = boundary_edges(complex)?;
    let mut unused: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut cycles = Vec::new();
    while let Some(&(a, b)) = unused.iter().next() {
        let mut walk = vec![a];
        let (mut from, mut to) = (a, b);
        loop {
            unused.remove(&(from.min(to), from.max(to)));
            let next = continue_boundary(complex, from, to)?;
            if (to, next) == (a, b) {
                break;
            }
            if walk.contains(&to) {
                return Err(TopologyError::NonManifoldVertex { vertex: to });
            }
            walk.push(to);
            (from, to) = (to, next);
        }
        // a lone edge in no cell walks straight back
        let cycle = VertexCycle::new(walk.clone()).ok_or(TopologyError::NonManifoldVertex { vertex: walk[0] })?;
        cycles.push(cycle);
    }
    cycles.sort();
    Ok(cycles)
}

/// Having walked the boundary edge `from -> at`, the next boundary vertex after `at`.
fn continue_boundary<C: CellComplex + ?Sized>(complex: &C, from: usize, at: usize) -> Result<usize> {
    let link = link_of(complex, at)?;
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in &link.edges {
        adj.entry(e.a).or_default().push(e.b);
        adj.entry(e.b).or_default().push(e.a);
    }
    let (mut prev, mut cur) = (usize::MAX, from);
    loop {
        let step = adj.get(&cur).into_iter().flatten().copied().find(|&n| n != prev);
        match step {
            Some(n) if n != from => (prev, cur) = (cur, n),
            _ => return Ok(cur),
        }
    }
}

/// Vertices lying in some two-cell but on no boundary edge.
pub fn interior_vertices<C: CellComplex + ?Sized>(complex: &C) -> Result<BTreeSet<usize>> {
    let mut on_boundary = vec![false; complex.vertex_count()];
    for (a, b) in boundary_edges(complex)? {
        on_boundary[a] = true;
        on_boundary[b] = true;
    }
    Ok((0..complex.vertex_count())
        .filter(|&v| !on_boundary[v] && !complex.cells_at(v).is_empty())
        .collect())
}
