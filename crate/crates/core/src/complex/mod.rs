//! Data model for triangle-pentagon complexes and two-dimensional simplicial complexes.

mod cycle;
mod graph;
mod link;
mod simplicial;
mod topology;
mod tp;

use std::collections::BTreeSet;

use serde::Serialize;

pub use cycle::{canonical_cyclic, VertexCycle};
pub use graph::{enumerate_induced_cycles, Graph};
pub use link::{link_of, LinkEdge, LinkGraph};
pub use simplicial::{SimplicialComplex2D, VertexOrigin};
pub use topology::{boundary_cycles, boundary_edges, edge_cell_counts, euler_characteristic, interior_vertices};
pub use tp::{build_tp_complex, TPComplex};

use crate::angle::AngleWeight;
use crate::error::{check_index, Result, TopologyError};

/// A two-cell: a triangle (sorted vertices) or a pentagon (canonical cyclic order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cell {
    Triangle([usize; 3]),
    Pentagon([usize; 5]),
}

impl Cell {
    pub fn vertices(&self) -> &[usize] {
        match self {
            Cell::Triangle(t) => t,
            Cell::Pentagon(p) => p,
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices().contains(&v)
    }

    /// The two vertices adjacent to `v` along the cell boundary, ascending.
    pub fn boundary_neighbours(&self, v: usize) -> Option<(usize, usize)> {
        let vs = self.vertices();
        let n = vs.len();
        let i = vs.iter().position(|&x| x == v)?;
        let (a, b) = (vs[(i + n - 1) % n], vs[(i + 1) % n]);
        Some((a.min(b), a.max(b)))
    }

    /// Boundary edges as `(min, max)` pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let vs = self.vertices();
        let n = vs.len();
        (0..n)
            .map(|i| {
                let (a, b) = (vs[i], vs[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect()
    }

    pub(crate) fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.vertices().to_vec();
        v.sort_unstable();
        v
    }
}

/// Where a link edge's angle comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    TriangleCorner,
    PentagonCorner,
    WheelRimCorner,
    WheelApexCorner,
}

/// The contribution of one cell corner to the link of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner {
    pub weight: AngleWeight,
    pub provenance: Provenance,
}

/// Common read-only view of [`TPComplex`] and [`SimplicialComplex2D`].
pub trait CellComplex: Sync {
    fn vertex_count(&self) -> usize;
    fn skeleton(&self) -> &Graph;
    fn cells(&self) -> &[Cell];
    /// Indices into [`CellComplex::cells`] of the cells containing `v`.
    fn cells_at(&self, v: usize) -> &[usize];
    /// Angle and provenance of `cell` at its corner `v`.
    fn corner(&self, cell: &Cell, v: usize) -> Result<Corner>;

    fn edge_count(&self) -> usize {
        self.skeleton().edge_count()
    }

    fn has_edge(&self, a: usize, b: usize) -> bool {
        self.skeleton().has_edge(a, b)
    }

    /// Whether the given vertex set (any order) is a vertex, edge or triangle of the complex.
    fn has_simplex(&self, vertices: &[usize]) -> bool {
        match vertices {
            [v] => *v < self.vertex_count(),
            [a, b] => self.has_edge(*a, *b),
            [a, b, c] => {
                let mut t = [*a, *b, *c];
                t.sort_unstable();
                self.has_cell_on(&t)
            }
            _ => false,
        }
    }

    /// Whether some two-cell has exactly this (sorted) vertex set.
    fn has_cell_on(&self, sorted: &[usize]) -> bool {
        let Some(&first) = sorted.first() else { return false };
        if first >= self.vertex_count() {
            return false;
        }
        self.cells_at(first)
            .iter()
            .any(|&ci| self.cells()[ci].sorted_vertices() == sorted)
    }
}

/// A candidate subcomplex: vertices, edges and two-cells (as sorted vertex lists).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Subcomplex {
    pub vertices: BTreeSet<usize>,
    pub edges: BTreeSet<(usize, usize)>,
    pub cells: BTreeSet<Vec<usize>>,
}

impl Subcomplex {
    /// The cycle subcomplex through `vertices` in order.
    pub fn cycle(vertices: &[usize]) -> Self {
        let n = vertices.len();
        let edges = (0..n)
            .map(|i| {
                let (a, b) = (vertices[i], vertices[(i + 1) % n]);
                (a.min(b), a.max(b))
            })
            .collect();
        Self { vertices: vertices.iter().copied().collect(), edges, cells: BTreeSet::new() }
    }
}

/// True iff `sub` is a subcomplex and every cell of `complex` spanned by its vertices
/// already belongs to it.
pub fn is_full_subcomplex<C: CellComplex + ?Sized>(complex: &C, sub: &Subcomplex) -> Result<bool> {
    for &v in &sub.vertices {
        check_index(v, complex.vertex_count())?;
    }
    let is_sub = sub.edges.iter().all(|&(a, b)| {
        sub.vertices.contains(&a) && sub.vertices.contains(&b) && complex.has_edge(a, b)
    }) && sub
        .cells
        .iter()
        .all(|c| c.iter().all(|v| sub.vertices.contains(v)) && complex.has_cell_on(c));
    if !is_sub {
        return Ok(false);
    }
    for &a in &sub.vertices {
        for &b in complex.skeleton().neighbors(a) {
            if a < b && sub.vertices.contains(&b) && !sub.edges.contains(&(a, b)) {
                return Ok(false);
            }
        }
        for &ci in complex.cells_at(a) {
            let cell = complex.cells()[ci];
            if cell.vertices().iter().all(|v| sub.vertices.contains(v)) {
                let sorted = cell.sorted_vertices();
                if sorted[0] == a && !sub.cells.contains(&sorted) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Fullness of the cycle through `vertices` (in order): no chords and no spanned cells.
pub fn is_full_cycle<C: CellComplex + ?Sized>(complex: &C, vertices: &[usize]) -> Result<bool> {
    if vertices.len() < 3 {
        return Ok(false);
    }
    is_full_subcomplex(complex, &Subcomplex::cycle(vertices))
}

/// Shortest-path edge count in the 1-skeleton; `None` if unreachable.
pub fn combinatorial_distance<C: CellComplex + ?Sized>(complex: &C, u: usize, v: usize) -> Result<Option<usize>> {
    combinatorial_distance_avoiding(complex, u, v, &BTreeSet::new())
}

/// Like [`combinatorial_distance`] but paths may not pass through `avoid`.
pub fn combinatorial_distance_avoiding<C: CellComplex + ?Sized>(
    complex: &C,
    u: usize,
    v: usize,
    avoid: &BTreeSet<usize>,
) -> Result<Option<usize>> {
    let n = complex.vertex_count();
    check_index(u, n)?;
    check_index(v, n)?;
    for &a in avoid {
        check_index(a, n)?;
    }
    Ok(complex.skeleton().bfs_distances(u, avoid)[v])
}

pub(crate) fn corner_or_err(cell: &Cell, v: usize) -> Result<()> {
    if cell.contains(v) {
        Ok(())
    } else {
        Err(TopologyError::VertexNotInCell { vertex: v, cell: cell.vertices().to_vec() })
    }
}
