//! Exact angles of the regular and flattened-wheel metrics, and the link condition.
//!
//! A two-dimensional complex with finitely many cell shapes is locally CAT(0) iff every
//! injective loop in every vertex link has angular length at least 2π. All weights here
//! are whole multiples of π/30, so the comparison is an integer comparison.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use serde::Serialize;

pub use crate::angle::AngleWeight;
use crate::complex::{
    boundary_cycles, euler_characteristic, interior_vertices, link_of, Cell, CellComplex, LinkGraph,
};
use crate::error::{check_index, Result};
use crate::{map_vertices, Verdict};

/// Angle of `cell` at its corner `vertex`.
pub fn corner_angle<C: CellComplex + ?Sized>(complex: &C, cell: &Cell, vertex: usize) -> Result<AngleWeight> {
    Ok(complex.corner(cell, vertex)?.weight)
}

/// Sum of the corner angles of all two-cells at `v`.
pub fn vertex_angle_sum<C: CellComplex + ?Sized>(complex: &C, v: usize) -> Result<AngleWeight> {
    check_index(v, complex.vertex_count())?;
    complex
        .cells_at(v)
        .iter()
        .map(|&ci| corner_angle(complex, &complex.cells()[ci], v))
        .sum()
}

/// A minimum-weight simple cycle of a weighted link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkLoop {
    pub weight: AngleWeight,
    /// Link nodes in cyclic order.
    pub nodes: Vec<usize>,
}

/// Minimum-weight simple cycle in `link`, or `None` when the link is a forest.
///
/// For each edge `(a, b)`: its weight plus the shortest `a`–`b` path avoiding it.
/// Weights are positive, so the minimizing closed walk is a simple cycle.
pub fn shortest_link_loop(link: &LinkGraph) -> Option<LinkLoop> {
    let n = link.nodes.len();
    let mut adj: Vec<Vec<(usize, usize, u32)>> = vec![Vec::new(); n];
    for (i, e) in link.edges.iter().enumerate() {
        let (a, b) = (link.local(e.a), link.local(e.b));
        adj[a].push((b, i, e.weight.units()));
        adj[b].push((a, i, e.weight.units()));
    }
    let mut best: Option<(u32, Vec<usize>)> = None;
    for (i, e) in link.edges.iter().enumerate() {
        let (a, b) = (link.local(e.a), link.local(e.b));
        let bound = best.as_ref().map(|(w, _)| *w);
        if let Some((d, path)) = dijkstra_avoiding(&adj, a, b, i) {
            let total = d + e.weight.units();
            if bound.is_none_or(|w| total < w) {
                best = Some((total, path));
            }
        }
    }
    best.map(|(w, path)| LinkLoop {
        weight: AngleWeight::from_units(w),
        nodes: path.into_iter().map(|l| link.nodes[l]).collect(),
    })
}

fn dijkstra_avoiding(adj: &[Vec<(usize, usize, u32)>], from: usize, to: usize, skip: usize) -> Option<(u32, Vec<usize>)> {
    let mut dist = vec![u32::MAX; adj.len()];
    let mut prev = vec![usize::MAX; adj.len()];
    let mut heap = BinaryHeap::from([Reverse((0u32, from))]);
    dist[from] = 0;
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == to {
            break;
        }
        for &(w, ei, wt) in &adj[u] {
            if ei == skip {
                continue;
            }
            let nd = d + wt;
            if nd < dist[w] || (nd == dist[w] && u < prev[w]) {
                dist[w] = nd;
                prev[w] = u;
                heap.push(Reverse((nd, w)));
            }
        }
    }
    if dist[to] == u32::MAX {
        return None;
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    Some((dist[to], path))
}

/// Per-vertex outcome of the link condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VertexVerdict {
    Pass,
    Violation,
    /// Boundary vertex: not subject to the 2π bound.
    Exempt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLinkRecord {
    pub vertex: usize,
    pub interior: bool,
    pub angle_sum: AngleWeight,
    pub shortest_link_loop: Option<AngleWeight>,
    pub loop_witness: Option<Vec<usize>>,
    pub verdict: VertexVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkConditionReport {
    pub verdict: Verdict,
    pub violations: Vec<usize>,
    pub vertices: Vec<VertexLinkRecord>,
}

pub fn check_link_condition<C: CellComplex + ?Sized>(complex: &C) -> Result<LinkConditionReport> {
    check_link_condition_with(complex, false)
}

/// As [`check_link_condition`], optionally fanning per-vertex work out over threads.
pub fn check_link_condition_with<C: CellComplex + ?Sized>(complex: &C, parallel: bool) -> Result<LinkConditionReport> {
    let interior = interior_vertices(complex)?;
    let records = map_vertices(complex.vertex_count(), parallel, |v| -> Result<VertexLinkRecord> {
        let link = link_of(complex, v)?;
        let lp = shortest_link_loop(&link);
        let is_interior = interior.contains(&v);
        let verdict = match (&lp, is_interior) {
            (_, false) => VertexVerdict::Exempt,
            (Some(l), true) if l.weight < AngleWeight::FULL_TURN => VertexVerdict::Violation,
            _ => VertexVerdict::Pass,
        };
        Ok(VertexLinkRecord {
            vertex: v,
            interior: is_interior,
            angle_sum: link.total_weight(),
            shortest_link_loop: lp.as_ref().map(|l| l.weight),
            loop_witness: lp.map(|l| l.nodes),
            verdict,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    let violations: Vec<usize> =
        records.iter().filter(|r| r.verdict == VertexVerdict::Violation).map(|r| r.vertex).collect();
    Ok(LinkConditionReport { verdict: Verdict::from_ok(violations.is_empty()), violations, vertices: records })
}

/// Why a complex failed the CAT(0) disc test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum DiscFailure {
    Empty,
    Disconnected { components: usize },
    EulerCharacteristic { chi: i64 },
    NotADisc { boundary_cycles: usize },
    /// Some vertex link is neither a path nor a cycle.
    NotASurface { vertex: usize },
    NonManifold { detail: String },
    LinkCondition { violations: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscVerdict {
    pub verdict: Verdict,
    pub reasons: Vec<DiscFailure>,
}

impl DiscVerdict {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// CAT(0) disc test: a connected surface with χ = 1 and one boundary cycle that
/// satisfies the link condition.
///
/// The surface requirement makes the disc test exact: a compact connected surface
/// with χ = 1 and one boundary component is a disc, hence simply connected.
pub fn is_cat0_disc<C: CellComplex + ?Sized>(complex: &C) -> DiscVerdict {
    let mut reasons = Vec::new();
    let n = complex.vertex_count();
    if n == 0 {
        reasons.push(DiscFailure::Empty);
        return DiscVerdict { verdict: Verdict::Fail, reasons };
    }
    let components = complex.skeleton().components().len();
    if components != 1 {
        reasons.push(DiscFailure::Disconnected { components });
    }
    let chi = euler_characteristic(complex);
    if chi != 1 {
        reasons.push(DiscFailure::EulerCharacteristic { chi });
    }
    if let Some(vertex) = (0..n).find(|&v| !link_is_path_or_cycle(complex, v)) {
        reasons.push(DiscFailure::NotASurface { vertex });
    }
    match boundary_cycles(complex) {
        Ok(b) if b.len() == 1 => {}
        Ok(b) => reasons.push(DiscFailure::NotADisc { boundary_cycles: b.len() }),
        Err(e) => reasons.push(DiscFailure::NonManifold { detail: e.to_string() }),
    }
    match check_link_condition(complex) {
        Ok(r) if r.verdict == Verdict::Pass => {}
        Ok(r) => reasons.push(DiscFailure::LinkCondition { violations: r.violations }),
        Err(e) if e.is_non_manifold() => {}
        Err(e) => reasons.push(DiscFailure::NonManifold { detail: e.to_string() }),
    }
    let verdict = Verdict::from_ok(reasons.is_empty());
    DiscVerdict { verdict, reasons }
}

fn link_is_path_or_cycle<C: CellComplex + ?Sized>(complex: &C, v: usize) -> bool {
    let Ok(link) = link_of(complex, v) else { return false };
    let (g, _) = link.to_local_graph();
    if link.edges.len() != g.edge_count() || g.vertex_count() == 0 {
        return false;
    }
    let max_deg = (0..g.vertex_count()).map(|i| g.degree(i)).max().unwrap_or(0);
    max_deg <= 2 && g.components().len() == 1
}

/// Vertices `v` with `vertex_angle_sum(x, v) != vertex_angle_sum(y, v)` among `vertices`.
pub fn angle_sum_mismatches<A, B>(x: &A, y: &B, vertices: impl IntoIterator<Item = usize>) -> Result<BTreeSet<usize>>
where
    A: CellComplex + ?Sized,
    B: CellComplex + ?Sized,
{
    let mut out = BTreeSet::new();
    for v in vertices {
        if vertex_angle_sum(x, v)? != vertex_angle_sum(y, v)? {
            out.insert(v);
        }
    }
    Ok(out)
}
