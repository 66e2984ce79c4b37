//! Remove `k` edges from a graph while keeping every distance within an
//! additive stretch `t` (or an `(alpha, beta)` bound).
//!
//! Start with [`solve`] for decisions, [`verify`](verify::verify) for checking
//! a removal set, and [`oracle`] as brute-force ground truth. The
//! [`constructive`] module builds removal sets directly on graphs with many
//! short cycles.

pub mod candidates;
pub mod cli;
pub mod constructive;
pub mod generate;
pub mod graph;
pub mod io;
pub mod solver;
pub mod thresholds;
pub mod verify;

pub use candidates::{candidate_edges, CandidateSet, Cycle};
pub use graph::{DistMatrix, EdgeMask, Graph, GraphError, INF};
pub use solver::{
    oracle, solve, solve_ab, solve_additive, solve_max_k, Branch, Mode, OracleError, SolveOptions,
    SolveResult, SolveStats, Verdict,
};
pub use thresholds::{thresholds, ThresholdTable};
pub use verify::{verify, Rational, SpannerParams, Violation};
