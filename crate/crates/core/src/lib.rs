//! Vertex position numbers of graphs.
//!
//! For a vertex `x`, an `x`-position set is a set `S` such that no vertex of
//! `S - {y}` lies on a shortest `x,y`-path for any `y` in `S`. This crate
//! computes the largest such set (`p_x`) exactly and in polynomial time as a
//! maximum antichain of the geodesic order rooted at `x`, together with the
//! extremes `vp` and `vp⁻` over all roots, an independent exponential oracle,
//! graph generators, small-graph census enumeration, and a harness of
//! checkable statements about these numbers.

pub mod bench;
pub mod bitset;
pub mod census;
pub mod distance;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod metrics;
pub mod oracle;
pub mod solver;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use solver::{solve_all, solve_px, verify_position_set, PositionResult, VpSummary};
