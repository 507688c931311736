use serde::Serialize;

use super::graph::Graph;
use super::tp::check_cell;
use super::{corner_or_err, Cell, CellComplex, Corner, Provenance};
use crate::angle::AngleWeight;
use crate::error::{check_index, Result, TopologyError};

/// Whether a vertex came from the original complex or is a pentagon center.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexOrigin {
    Original,
    Center,
}

/// A finite two-dimensional simplicial complex, optionally marking pentagon centers.
///
/// [`SimplicialComplex2D::new`] enforces flagness (which also rules out 4-cliques).
/// [`SimplicialComplex2D::from_raw`] skips that check so non-flag inputs can be
/// handed to the checkers that report on them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex2D {
    vertex_count: usize,
    triangles: Vec<[usize; 3]>,
    centers: Vec<usize>,
    origin: Vec<VertexOrigin>,
    cells: Vec<Cell>,
    incidence: Vec<Vec<usize>>,
    skeleton: Graph,
}

impl SimplicialComplex2D {
    /// Validated flag complex without center markings.
    pub fn new(vertex_count: usize, triangles: &[[usize; 3]]) -> Result<Self> {
        Self::with_centers(vertex_count, triangles, &[])
    }

    /// Validated flag complex; `centers[i]` is the center vertex of pentagon `i`.
    ///
    /// Each center must have a 5-cycle link.
    pub fn with_centers(vertex_count: usize, triangles: &[[usize; 3]], centers: &[usize]) -> Result<Self> {
        let x = Self::from_raw(vertex_count, triangles, centers)?;
        if let Some(clique) = x.flag_violation() {
            return Err(TopologyError::FlagViolation { clique });
        }
        for &c in &x.centers {
            let link = super::link_of(&x, c)?;
            let g = link.to_local_graph().0;
            let is_five_cycle = g.vertex_count() == 5 && (0..5).all(|i| g.degree(i) == 2) && g.components().len() == 1;
            if !is_five_cycle {
                return Err(TopologyError::InvalidCenter { center: c });
            }
        }
        Ok(x)
    }

    /// Checks indices, degenerate and duplicate triangles only.
    pub fn from_raw(vertex_count: usize, triangles: &[[usize; 3]], centers: &[usize]) -> Result<Self> {
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            check_cell(vertex_count, t)?;
            let mut s = *t;
            s.sort_unstable();
            tris.push(s);
        }
        tris.sort_unstable();
        if let Some(w) = tris.windows(2).find(|w| w[0] == w[1]) {
            return Err(TopologyError::DuplicateCell { cell: w[0].to_vec() });
        }
        let mut origin = vec![VertexOrigin::Original; vertex_count];
        for &c in centers {
            check_index(c, vertex_count)?;
            if origin[c] == VertexOrigin::Center {
                return Err(TopologyError::InvalidCenter { center: c });
            }
            origin[c] = VertexOrigin::Center;
        }
        let cells: Vec<Cell> = tris.iter().map(|&t| Cell::Triangle(t)).collect();
        let skeleton = Graph::from_edges(vertex_count, cells.iter().flat_map(|c| c.edges()));
        let mut incidence = vec![Vec::new(); vertex_count];
        for (i, t) in tris.iter().enumerate() {
            for &v in t {
                incidence[v].push(i);
            }
        }
        Ok(Self { vertex_count, triangles: tris, centers: centers.to_vec(), origin, cells, incidence, skeleton })
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.skeleton.edges().collect()
    }

    /// Center vertex of each source pentagon, indexed by pentagon.
    pub fn center_of(&self) -> &[usize] {
        &self.centers
    }

    pub fn vertex_origin(&self, v: usize) -> Result<VertexOrigin> {
        check_index(v, self.vertex_count)?;
        Ok(self.origin[v])
    }

    /// First pairwise-adjacent vertex set (3 or 4 vertices) that is not a simplex, if any.
    ///
    /// Any 4-clique counts, since the complex has no 3-simplices.
    pub fn flag_violation(&self) -> Option<Vec<usize>> {
        let g = &self.skeleton;
        for (a, b) in g.edges() {
            for &c in g.neighbors(b) {
                if c <= b || !g.has_edge(a, c) {
                    continue;
                }
                if self.triangles.binary_search(&[a, b, c]).is_err() {
                    return Some(vec![a, b, c]);
                }
                if let Some(&d) = g.neighbors(c).iter().find(|&&d| d > c && g.has_edge(a, d) && g.has_edge(b, d)) {
                    return Some(vec![a, b, c, d]);
                }
            }
        }
        None
    }

    pub fn is_flag(&self) -> bool {
        self.flag_violation().is_none()
    }
}

impl CellComplex for SimplicialComplex2D {
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
        let apex = cell.vertices().iter().copied().find(|&u| self.origin[u] == VertexOrigin::Center);
        Ok(match apex {
            Some(c) if c == v => Corner { weight: AngleWeight::WHEEL_APEX, provenance: Provenance::WheelApexCorner },
            Some(_) => Corner { weight: AngleWeight::WHEEL_RIM, provenance: Provenance::WheelRimCorner },
            None => Corner { weight: AngleWeight::EQUILATERAL, provenance: Provenance::TriangleCorner },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_boundary_is_not_flag() {
        let err = SimplicialComplex2D::new(4, &[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap_err();
        assert_eq!(err, TopologyError::FlagViolation { clique: vec![0, 1, 2, 3] });
    }

    #[test]
    fn empty_triangle_is_not_flag() {
        let x = SimplicialComplex2D::from_raw(4, &[[0, 1, 3], [1, 2, 3], [0, 2, 3]], &[]).unwrap();
        assert_eq!(x.flag_violation(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn centers_need_a_wheel() {
        let tris = [[0, 1, 5], [1, 2, 5], [2, 3, 5], [3, 4, 5], [0, 4, 5]];
        let x = SimplicialComplex2D::with_centers(6, &tris, &[5]).unwrap();
        assert_eq!(x.vertex_origin(5).unwrap(), VertexOrigin::Center);
        assert_eq!(x.vertex_origin(0).unwrap(), VertexOrigin::Original);
        assert!(matches!(
            SimplicialComplex2D::with_centers(6, &tris, &[0]),
            Err(TopologyError::InvalidCenter { center: 0 })
        ));
    }

    #[test]
    fn wheel_corners() {
        let tris = [[0, 1, 5], [1, 2, 5], [2, 3, 5], [3, 4, 5], [0, 4, 5]];
        let x = SimplicialComplex2D::with_centers(6, &tris, &[5]).unwrap();
        let t = x.cells()[0];
        assert_eq!(x.corner(&t, 5).unwrap().weight.units(), 12);
        assert_eq!(x.corner(&t, 0).unwrap().weight.units(), 9);
        let plain = SimplicialComplex2D::new(3, &[[0, 1, 2]]).unwrap();
        assert_eq!(plain.corner(&plain.cells()[0], 1).unwrap().weight.units(), 10);
    }
}
