use serde::Serialize;

use super::graph::Graph;
use super::{CellComplex, Provenance};
use crate::angle::AngleWeight;
use crate::error::{check_index, Result};

/// One corner of a cell at the link center, seen as an edge between its two boundary neighbours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LinkEdge {
    pub a: usize,
    pub b: usize,
    pub weight: AngleWeight,
    pub provenance: Provenance,
}

/// The link of a vertex as a weighted graph on its neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkGraph {
    pub center: usize,
    /// Neighbours of `center`, ascending.
    pub nodes: Vec<usize>,
    /// Sorted by `(a, b)` with `a < b`.
    pub edges: Vec<LinkEdge>,
}

impl LinkGraph {
    pub fn total_weight(&self) -> AngleWeight {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// The link as a [`Graph`] on `0..nodes.len()`, plus the local-to-global vertex map.
    pub fn to_local_graph(&self) -> (Graph, Vec<usize>) {
        let mut g = Graph::new(self.nodes.len());
        for e in &self.edges {
            g.add_edge(self.local(e.a), self.local(e.b));
        }
        (g, self.nodes.clone())
    }

    pub(crate) fn local(&self, v: usize) -> usize {
        self.nodes.binary_search(&v).expect("link edge endpoint is a link node")
    }
}

/// Link of `v`: each cell corner at `v` contributes an edge between the corner's neighbours.
pub fn link_of<C: CellComplex + ?Sized>(complex: &C, v: usize) -> Result<LinkGraph> {
    check_index(v, complex.vertex_count())?;
    let nodes = complex.skeleton().neighbors(v).to_vec();
    let mut edges = Vec::with_capacity(complex.cells_at(v).len());
    for &ci in complex.cells_at(v) {
        let cell = complex.cells()[ci];
        let corner = complex.corner(&cell, v)?;
        let (a, b) = cell.boundary_neighbours(v).expect("incident cell contains v");
        edges.push(LinkEdge { a, b, weight: corner.weight, provenance: corner.provenance });
    }
    edges.sort();
    Ok(LinkGraph { center: v, nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_tp_complex;
    use crate::subdivision::subdivide;

    #[test]
    fn subdivided_center_link_is_weighted_five_cycle() {
        let xs = subdivide(&build_tp_complex(5, &[], &[[0, 1, 2, 3, 4]]).unwrap()).unwrap();
        let link = link_of(&xs, 5).unwrap();
        assert_eq!(link.nodes, vec![0, 1, 2, 3, 4]);
        assert_eq!(link.edges.len(), 5);
        assert!(link.edges.iter().all(|e| e.weight.units() == 12 && e.provenance == Provenance::WheelApexCorner));
        assert_eq!(link.total_weight().units(), 60);
    }

    #[test]
    fn triangle_corner_link() {
        let x = build_tp_complex(3, &[[0, 1, 2]], &[]).unwrap();
        let link = link_of(&x, 0).unwrap();
        assert_eq!(link.edges.len(), 1);
        assert_eq!((link.edges[0].a, link.edges[0].b, link.edges[0].weight.units()), (1, 2, 10));
    }

    #[test]
    fn pentagon_corner_link() {
        let x = build_tp_complex(5, &[], &[[0, 1, 2, 3, 4]]).unwrap();
        let link = link_of(&x, 2).unwrap();
        assert_eq!(link.nodes, vec![1, 3]);
        assert_eq!(link.edges.len(), 1);
        assert_eq!((link.edges[0].a, link.edges[0].b, link.edges[0].weight.units()), (1, 3, 18));
        assert!(link_of(&x, 9).is_err());
    }
}
