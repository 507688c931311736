use std::collections::{BTreeMap, BTreeSet};

use super::cycle::canonical_cyclic;
use super::graph::{enumerate_induced_cycles, Graph};
use super::{corner_or_err, Cell, CellComplex, Corner, Provenance};
use crate::angle::AngleWeight;
use crate::error::{check_index, Result, TopologyError};

/// A finite two-dimensional cell complex whose two-cells are triangles and pentagons.
///
/// Always validated: pentagons are chord-free, the 1-skeleton has no induced 4-cycle,
/// every 3-clique is a triangle cell and distinct cells share at most one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TPComplex {
    vertex_count: usize,
    triangles: Vec<[usize; 3]>,
    pentagons: Vec<[usize; 5]>,
    cells: Vec<Cell>,
    incidence: Vec<Vec<usize>>,
    skeleton: Graph,
}

/// Validates raw cell lists and builds a [`TPComplex`].
///
/// Triangles are stored sorted; pentagons in canonical cyclic form, both in ascending order.
pub fn build_tp_complex(vertex_count: usize, triangles: &[[usize; 3]], pentagons: &[[usize; 5]]) -> Result<TPComplex> {
    let mut tris = Vec::with_capacity(triangles.len());
    for t in triangles {
        check_cell(vertex_count, t)?;
        let mut s = *t;
        s.sort_unstable();
        tris.push(s);
    }
    let mut pents = Vec::with_capacity(pentagons.len());
    for p in pentagons {
        check_cell(vertex_count, p)?;
        let c = canonical_cyclic(p);
        pents.push([c[0], c[1], c[2], c[3], c[4]]);
    }
    tris.sort_unstable();
    pents.sort_unstable();
    if let Some(w) = tris.windows(2).find(|w| w[0] == w[1]) {
        return Err(TopologyError::DuplicateCell { cell: w[0].to_vec() });
    }
    if let Some(w) = pents.windows(2).find(|w| w[0] == w[1]) {
        return Err(TopologyError::DuplicateCell { cell: w[0].to_vec() });
    }

    let cells: Vec<Cell> = tris
        .iter()
        .map(|&t| Cell::Triangle(t))
        .chain(pents.iter().map(|&p| Cell::Pentagon(p)))
        .collect();
    let skeleton = Graph::from_edges(vertex_count, cells.iter().flat_map(|c| c.edges()));

    for p in &pents {
        for i in 0..5 {
            let (a, b) = (p[i], p[(i + 2) % 5]);
            if skeleton.has_edge(a, b) {
                return Err(TopologyError::PentagonChord { pentagon: *p, chord: (a.min(b), a.max(b)) });
            }
        }
    }

    check_shared_edges(&cells)?;

    for (a, b) in skeleton.edges() {
        for &c in skeleton.neighbors(b) {
            if c > b && skeleton.has_edge(a, c) && tris.binary_search(&[a, b, c]).is_err() {
                return Err(TopologyError::UnfilledTriangleClique { clique: [a, b, c] });
            }
        }
    }

    if let Some(c) = enumerate_induced_cycles(&skeleton, 4).into_iter().find(|c| c.len() == 4) {
        let v = c.vertices();
        return Err(TopologyError::Full4Cycle { cycle: [v[0], v[1], v[2], v[3]] });
    }

    let mut incidence = vec![Vec::new(); vertex_count];
    for (i, c) in cells.iter().enumerate() {
        for &v in c.vertices() {
            incidence[v].push(i);
        }
    }
    Ok(TPComplex { vertex_count, triangles: tris, pentagons: pents, cells, incidence, skeleton })
}

pub(crate) fn check_cell(vertex_count: usize, cell: &[usize]) -> Result<()> {
    for &v in cell {
        check_index(v, vertex_count)?;
    }
    let mut s = cell.to_vec();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(TopologyError::DegenerateCell { cell: cell.to_vec() });
    }
    Ok(())
}

fn check_shared_edges(cells: &[Cell]) -> Result<()> {
    let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        for e in c.edges() {
            by_edge.entry(e).or_default().push(i);
        }
    }
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    for owners in by_edge.values() {
        for (k, &i) in owners.iter().enumerate() {
            for &j in &owners[k + 1..] {
                if !seen.insert((i, j)) {
                    return Err(TopologyError::CellsShareEdges {
                        first: cells[i].vertices().to_vec(),
                        second: cells[j].vertices().to_vec(),
                    });
                }
            }
        }
    }
    Ok(())
}

impl TPComplex {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// Pentagons in canonical cyclic form, ascending. Subdivision numbers centers in this order.
    pub fn pentagons(&self) -> &[[usize; 5]] {
        &self.pentagons
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.skeleton.edges().collect()
    }
}

impl CellComplex for TPComplex {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    fn cells(&self) -> &[Cell] {
        &self.cells
    }

    fn cells_at(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    fn corner(&self, cell: &Cell, v: usize) -> Result<Corner> {
        corner_or_err(cell, v)?;
        Ok(match cell {
            Cell::Triangle(_) => Corner { weight: AngleWeight::EQUILATERAL, provenance: Provenance::TriangleCorner },
            Cell::Pentagon(_) => Corner { weight: AngleWeight::PENTAGON, provenance: Provenance::PentagonCorner },
        })
    }
}
