use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::{enumerate_induced_cycles, is_full_cycle, link_of, CellComplex, SimplicialComplex2D, VertexCycle};
use crate::error::Result;
use crate::{map_vertices, Verdict};

/// Length of a shortest full cycle, or infinite when there is none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Infinite => None,
        }
    }

    /// At least `k` (infinite is at least everything).
    pub fn at_least(self, k: usize) -> bool {
        self >= Girth::Finite(k)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => s.serialize_u64(*k as u64),
            Girth::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// A shortest cycle of the link of `v` that is full in `x`, if any.
pub fn shortest_full_link_cycle(x: &SimplicialComplex2D, v: usize) -> Result<Option<VertexCycle>> {
    let link = link_of(x, v)?;
    let (g, nodes) = link.to_local_graph();
    for local in enumerate_induced_cycles(&g, g.vertex_count()) {
        let global: Vec<usize> = local.vertices().iter().map(|&i| nodes[i]).collect();
        if is_full_cycle(x, &global)? {
            return Ok(VertexCycle::new(global));
        }
    }
    Ok(None)
}

pub fn link_girth(x: &SimplicialComplex2D, v: usize) -> Result<Girth> {
    Ok(girth_of(shortest_full_link_cycle(x, v)?.as_ref()))
}

fn girth_of(c: Option<&VertexCycle>) -> Girth {
    c.map_or(Girth::Infinite, |c| Girth::Finite(c.len()))
}

/// Link girth and a witness cycle for every vertex, in vertex order.
pub fn link_girths_with(x: &SimplicialComplex2D, parallel: bool) -> Result<Vec<(Girth, Option<VertexCycle>)>> {
    map_vertices(x.vertex_count(), parallel, |v| {
        shortest_full_link_cycle(x, v).map(|c| (girth_of(c.as_ref()), c))
    })
    .into_iter()
    .collect()
}

/// Number of edges in the link of `v`.
pub fn combinatorial_girth<C: CellComplex + ?Sized>(x: &C, v: usize) -> Result<usize> {
    Ok(link_of(x, v)?.edges.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargenessViolation {
    pub vertex: usize,
    pub cycle: VertexCycle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LargenessReport {
    pub k: usize,
    pub verdict: Verdict,
    pub violations: Vec<LargenessViolation>,
}

/// Every vertex link has no full cycle shorter than `k`.
pub fn is_locally_k_large(x: &SimplicialComplex2D, k: usize) -> Result<LargenessReport> {
    is_locally_k_large_with(x, k, false)
}

pub fn is_locally_k_large_with(x: &SimplicialComplex2D, k: usize, parallel: bool) -> Result<LargenessReport> {
    let violations: Vec<LargenessViolation> = link_girths_with(x, parallel)?
        .into_iter()
        .enumerate()
        .filter_map(|(vertex, (g, c))| (!g.at_least(k)).then(|| LargenessViolation { vertex, cycle: c.expect("finite girth has a witness") }))
        .collect();
    Ok(LargenessReport { k, verdict: Verdict::from_ok(violations.is_empty()), violations })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClauseStatus {
    Pass,
    Fail,
    Vacuous,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseWitness {
    /// Vertex satisfying the clause premise.
    pub vertex: usize,
    pub neighbour: usize,
    pub neighbour_girth: Girth,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    /// Link girth the premise asks for.
    pub premise_girth: usize,
    /// Link girth every neighbour of a premise vertex needs.
    pub required_girth: usize,
    pub status: ClauseStatus,
    pub premise_vertices: Vec<usize>,
    pub witnesses: Vec<ClauseWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiveEightReport {
    pub verdict: Verdict,
    /// Neighbours of link-girth-4 vertices have link girth ≥ 8.
    pub clause_5_8: ClauseReport,
    /// Neighbours of link-girth-5 vertices have link girth ≥ 7.
    pub clause_6_7: ClauseReport,
}

pub fn check_58_condition(x: &SimplicialComplex2D) -> Result<FiveEightReport> {
    check_58_condition_with(x, false)
}

pub fn check_58_condition_with(x: &SimplicialComplex2D, parallel: bool) -> Result<FiveEightReport> {
    let girths: Vec<Girth> = link_girths_with(x, parallel)?.into_iter().map(|(g, _)| g).collect();
    let clause_5_8 = clause(x, &girths, 4, 8);
    let clause_6_7 = clause(x, &girths, 5, 7);
    let ok = clause_5_8.status != ClauseStatus::Fail && clause_6_7.status != ClauseStatus::Fail;
    Ok(FiveEightReport { verdict: Verdict::from_ok(ok), clause_5_8, clause_6_7 })
}

fn clause(x: &SimplicialComplex2D, girths: &[Girth], premise: usize, required: usize) -> ClauseReport {
    let premise_vertices: Vec<usize> = (0..girths.len()).filter(|&v| girths[v] == Girth::Finite(premise)).collect();
    let witnesses: Vec<ClauseWitness> = premise_vertices
        .iter()
        .flat_map(|&v| {
            x.skeleton()
                .neighbors(v)
                .iter()
                .filter(|&&u| !girths[u].at_least(required))
                .map(move |&u| ClauseWitness { vertex: v, neighbour: u, neighbour_girth: girths[u] })
        })
        .collect();
    let status = if premise_vertices.is_empty() {
        ClauseStatus::Vacuous
    } else if witnesses.is_empty() {
        ClauseStatus::Pass
    } else {
        ClauseStatus::Fail
    };
    ClauseReport { premise_girth: premise, required_girth: required, status, premise_vertices, witnesses }
}
