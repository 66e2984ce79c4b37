//! Constructive removal sets for graphs with many short cycles.
//!
//! When the candidate set is large, a solution provably exists. The routines
//! here build it directly instead of enumerating:
//!
//! * [`find_disjoint_paths`] distills `k` edge-disjoint paths from a large
//!   family of short paths between two vertices.
//! * [`middle_edge_removal`] turns many short cycles through one edge into a
//!   removal set by cutting the middle edge of disjoint detours.
//! * [`sp_forest`], [`check_star`] and [`build_sequence`] order many
//!   edge-disjoint cycles so that escape paths towards earlier cycles never
//!   cross later ones.
//! * [`spanner_from_sequence`] picks one edge per cycle along such a sequence.
//!
//! Every routine takes an [`Effort`]. `Guaranteed` enforces the size
//! thresholds under which success is a theorem and treats any failure as a
//! bug; `BestEffort` runs the same machinery on smaller inputs and reports
//! failure normally. Every returned removal set has been re-verified.

mod forest;
mod middle;
mod paths;
mod sequence;
mod sequence_spanner;

pub use forest::{check_star, sp_forest, CycleSeq, SpForest, StarWitness};
pub use middle::{middle_edge_removal, MiddleEdgeOutcome};
pub use paths::{find_disjoint_paths, DisjointPathsResult, PathFamily};
pub use sequence::{build_sequence, SeqSearchState, SequenceCase, SequenceOutcome};
pub use sequence_spanner::{spanner_from_sequence, SequenceSpanner};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Effort {
    /// Enforce the existence thresholds exactly.
    Guaranteed,
    /// Run below threshold; failure is an ordinary outcome.
    BestEffort,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    #[error("path family has {have} paths, need at least {need}")]
    InsufficientPaths { have: usize, need: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("construction failed: {0}")]
    Failed(String),
    #[error("internal assertion failed: {0}")]
    InternalAssertionFailed(String),
}

impl Effort {
    /// The error for a step that cannot happen above threshold.
    pub(crate) fn failure(self, msg: String) -> ConstructError {
        match self {
            Effort::Guaranteed => ConstructError::InternalAssertionFailed(msg),
            Effort::BestEffort => ConstructError::Failed(msg),
        }
    }
}
