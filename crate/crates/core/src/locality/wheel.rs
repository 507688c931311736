use serde::Serialize;

use crate::complex::{
    enumerate_induced_cycles, is_full_cycle, is_full_subcomplex, link_of, CellComplex, SimplicialComplex2D,
    Subcomplex, VertexCycle,
};
use crate::error::Result;
use crate::map_vertices;

/// A hub joined to every vertex of a full rim cycle of length at least 4.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Wheel {
    pub hub: usize,
    pub rim: VertexCycle,
}

impl Wheel {
    pub fn len(&self) -> usize {
        self.rim.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rim.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.hub).chain(self.rim.vertices().iter().copied())
    }

    /// Hub, rim, spokes and the triangles between consecutive spokes.
    pub fn subcomplex(&self) -> Subcomplex {
        let mut sub = Subcomplex::cycle(self.rim.vertices());
        sub.vertices.insert(self.hub);
        for (a, b) in self.rim.edges() {
            sub.edges.insert((self.hub.min(a), self.hub.max(a)));
            let mut t = vec![self.hub, a, b];
            t.sort_unstable();
            sub.cells.insert(t);
        }
        sub
    }

    /// Re-checks the wheel against `x`: a subcomplex and full.
    pub fn is_full_in(&self, x: &SimplicialComplex2D) -> Result<bool> {
        is_full_subcomplex(x, &self.subcomplex())
    }
}

/// All wheels with rim length in `4..=max_rim`, ordered by hub then rim.
pub fn enumerate_wheels(x: &SimplicialComplex2D, max_rim: usize) -> Result<Vec<Wheel>> {
    enumerate_wheels_with(x, max_rim, false)
}

pub fn enumerate_wheels_with(x: &SimplicialComplex2D, max_rim: usize, parallel: bool) -> Result<Vec<Wheel>> {
    let per_hub = map_vertices(x.vertex_count(), parallel, |hub| wheels_at(x, hub, max_rim));
    let mut out = Vec::new();
    for w in per_hub {
        out.extend(w?);
    }
    Ok(out)
}

fn wheels_at(x: &SimplicialComplex2D, hub: usize, max_rim: usize) -> Result<Vec<Wheel>> {
    let link = link_of(x, hub)?;
    let (g, nodes) = link.to_local_graph();
    let mut out = Vec::new();
    for local in enumerate_induced_cycles(&g, max_rim) {
        if local.len() < 4 {
            continue;
        }
        let rim: Vec<usize> = local.vertices().iter().map(|&i| nodes[i]).collect();
        if is_full_cycle(x, &rim)? {
            out.push(Wheel { hub, rim: VertexCycle::new(rim).expect("distinct link nodes") });
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_tp_complex;
    use crate::subdivision::subdivide;

    #[test]
    fn wheel_of_subdivided_pentagon() {
        let xs = subdivide(&build_tp_complex(5, &[], &[[0, 1, 2, 3, 4]]).unwrap()).unwrap();
        let ws = enumerate_wheels(&xs, 8).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].hub, 5);
        assert_eq!(ws[0].rim.vertices(), &[0, 1, 2, 3, 4]);
        assert!(ws[0].is_full_in(&xs).unwrap());
    }

    #[test]
    fn lone_triangle_has_no_wheels() {
        let x = SimplicialComplex2D::new(3, &[[0, 1, 2]]).unwrap();
        assert!(enumerate_wheels(&x, 8).unwrap().is_empty());
    }

    #[test]
    fn rim_bound_is_respected() {
        let x = SimplicialComplex2D::new(7, &[[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 6], [0, 1, 6]]).unwrap();
        assert!(enumerate_wheels(&x, 5).unwrap().is_empty());
        assert_eq!(enumerate_wheels(&x, 6).unwrap().len(), 1);
    }
}
