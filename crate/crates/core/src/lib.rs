//! Triangle-pentagon complexes, their star subdivision, and exact checkers for
//! metric (link condition) and combinatorial (local largeness, 7-location,
//! 5/8-condition) nonpositive curvature.

pub mod angle;
pub mod complex;
pub mod curvature;
pub mod error;
pub mod generators;
pub mod io;
pub mod locality;
pub mod subdivision;

use rayon::prelude::*;
use serde::Serialize;

pub use angle::AngleWeight;
pub use complex::{build_tp_complex, CellComplex, SimplicialComplex2D, TPComplex, VertexCycle};
pub use error::TopologyError;
pub use subdivision::subdivide;

/// Pass/fail outcome of a check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_ok(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

/// `f(0), .., f(n - 1)` in order, computed on the rayon pool when `parallel` is set.
pub(crate) fn map_vertices<T, F>(n: usize, parallel: bool, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}
