//! Double wheels and m-location.
//!
//! A (k,l)-dwheel is a pair of full wheels `W1 = (h1; v1, v2, v3, .., vk)` and
//! `W2 = (v2; w1, .., w_{l-1}, w_l)` with `w_l = h1` and `w_{l-1} = v3`: each hub sits
//! on the other's rim. It is planar when `v1 = w1` and nonplanar when `v1 ~ w1`.
//! The boundary has length `k + l - 4` (planar) or `k + l - 3` (nonplanar).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::wheel::{enumerate_wheels, Wheel};
use crate::complex::{CellComplex, SimplicialComplex2D};
use crate::error::{Result, TopologyError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DwheelKind {
    Planar,
    Nonplanar,
}

/// One aligned dwheel, with the shared vertices named as in the module docs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DwheelWitness {
    pub wheel1: Wheel,
    pub wheel2: Wheel,
    pub kind: DwheelKind,
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub w1: usize,
    pub wl: usize,
    pub boundary_length: usize,
    pub wheels_full: bool,
    pub containing_vertex: Option<usize>,
}

impl DwheelWitness {
    pub fn vertices(&self) -> BTreeSet<usize> {
        self.wheel1.vertices().chain(self.wheel2.vertices()).collect()
    }

    /// All simplices of `W1 ∪ W2` as sorted vertex lists.
    pub fn simplices(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for w in [&self.wheel1, &self.wheel2] {
            let sub = w.subcomplex();
            out.extend(sub.vertices.iter().map(|&v| vec![v]));
            out.extend(sub.edges.iter().map(|&(a, b)| vec![a, b]));
            out.extend(sub.cells.iter().cloned());
        }
        out
    }

    /// Orbit key under swapping the wheels and mirroring the alignment.
    fn key(&self) -> (Wheel, Wheel, DwheelKind, Vec<usize>) {
        let (a, b) = if self.wheel1 <= self.wheel2 {
            (self.wheel1.clone(), self.wheel2.clone())
        } else {
            (self.wheel2.clone(), self.wheel1.clone())
        };
        let mut shared: Vec<usize> = BTreeSet::from([self.v1, self.v3, self.w1]).into_iter().collect();
        shared.sort_unstable();
        (a, b, self.kind, shared)
    }
}

/// A vertex `u` outside the dwheel such that every simplex of the dwheel spans a simplex with `u`.
fn containing_vertex(x: &SimplicialComplex2D, simplices: &BTreeSet<Vec<usize>>, inside: &BTreeSet<usize>) -> Option<usize> {
    (0..x.vertex_count()).find(|u| {
        !inside.contains(u)
            && simplices.iter().all(|s| {
                let mut with_u = s.clone();
                with_u.push(*u);
                x.has_simplex(&with_u)
            })
    })
}

/// Every dwheel with boundary length at most `max_boundary`, one per symmetry orbit, sorted.
pub fn enumerate_dwheels(x: &SimplicialComplex2D, max_boundary: usize) -> Result<Vec<DwheelWitness>> {
    // k + l - 4 <= max_boundary with l >= 4 bounds both rims by max_boundary
    let wheels = enumerate_wheels(x, max_boundary.max(4))?;
    let mut by_hub: BTreeMap<usize, Vec<&Wheel>> = BTreeMap::new();
    for w in &wheels {
        by_hub.entry(w.hub).or_default().push(w);
    }

    let mut found: BTreeMap<(Wheel, Wheel, DwheelKind, Vec<usize>), DwheelWitness> = BTreeMap::new();
    for w1 in &wheels {
        let rim1 = w1.rim.vertices();
        let k = rim1.len();
        for i in 0..k {
            let v2 = rim1[i];
            let Some(partners) = by_hub.get(&v2) else { continue };
            for (v1, v3) in [(rim1[(i + k - 1) % k], rim1[(i + 1) % k]), (rim1[(i + 1) % k], rim1[(i + k - 1) % k])] {
                for w2 in partners {
                    let l = w2.len();
                    let Some((p, q)) = w2.rim.neighbours_of(w1.hub) else { continue };
                    let w1_vertex = if p == v3 {
                        q
                    } else if q == v3 {
                        p
                    } else {
                        continue;
                    };
                    let kind = if w1_vertex == v1 {
                        DwheelKind::Planar
                    } else if x.has_edge(w1_vertex, v1) {
                        DwheelKind::Nonplanar
                    } else {
                        continue;
                    };
                    let boundary_length = match kind {
                        DwheelKind::Planar => k + l - 4,
                        DwheelKind::Nonplanar => k + l - 3,
                    };
                    if boundary_length > max_boundary {
                        continue;
                    }
                    let mut witness = DwheelWitness {
                        wheel1: w1.clone(),
                        wheel2: (*w2).clone(),
                        kind,
                        v1,
                        v2,
                        v3,
                        w1: w1_vertex,
                        wl: w1.hub,
                        boundary_length,
                        wheels_full: w1.is_full_in(x)? && w2.is_full_in(x)?,
                        containing_vertex: None,
                    };
                    witness.containing_vertex = containing_vertex(x, &witness.simplices(), &witness.vertices());
                    let key = witness.key();
                    match found.get(&key) {
                        Some(existing) if *existing <= witness => {}
                        _ => {
                            found.insert(key, witness);
                        }
                    }
                }
            }
        }
    }
    let mut out: Vec<DwheelWitness> = found.into_values().collect();
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Located {
    Located,
    Violated,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocationReport {
    pub m: usize,
    pub verdict: Located,
    pub dwheels_found: Vec<DwheelWitness>,
    /// Indices into `dwheels_found` of qualifying dwheels that lie in no vertex link.
    pub violating: Vec<usize>,
}

/// m-location: every dwheel with boundary length ≤ `m` whose wheels are full lies in a vertex link.
///
/// Flagness is re-verified first; a non-flag complex is an error, not a verdict.
pub fn is_m_located(x: &SimplicialComplex2D, m: usize) -> Result<LocationReport> {
    if let Some(clique) = x.flag_violation() {
        return Err(TopologyError::FlagViolation { clique });
    }
    let dwheels = enumerate_dwheels(x, m)?;
    let violating: Vec<usize> = dwheels
        .iter()
        .enumerate()
        .filter(|(_, d)| d.wheels_full && d.containing_vertex.is_none())
        .map(|(i, _)| i)
        .collect();
    let verdict = if violating.is_empty() { Located::Located } else { Located::Violated };
    Ok(LocationReport { m, verdict, dwheels_found: dwheels, violating })
}
