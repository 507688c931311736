//! Combinatorial curvature checkers for flag simplicial complexes.
//!
//! A vertex is read as "k-large but not (k+1)-large" exactly when its
//! [`link_girth`] is `k`: the shortest cycle in its link that is full in the complex.

mod dwheel;
mod girth;
mod wheel;

pub use dwheel::{enumerate_dwheels, is_m_located, DwheelKind, DwheelWitness, Located, LocationReport};
pub use girth::{
    check_58_condition, check_58_condition_with, combinatorial_girth, is_locally_k_large, is_locally_k_large_with,
    link_girth, link_girths_with, shortest_full_link_cycle, ClauseReport, ClauseStatus, ClauseWitness,
    FiveEightReport, Girth, LargenessReport, LargenessViolation,
};
pub use wheel::{enumerate_wheels, enumerate_wheels_with, Wheel};
