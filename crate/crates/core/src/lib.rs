//! Temporally disjoint paths and walks on temporal graphs.
//!
//! The crate covers the temporal data model, static structure analysis,
//! an exhaustive oracle, two parameterized solvers (feedback-edge and
//! line), reduction generators with witness builders, a verifier and a
//! plain-text file format.

pub mod error;
pub mod fes;
pub mod foremost;
pub mod format;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod line;
pub mod oracle;
pub mod structure;
pub mod verifier;
pub mod walk;

pub use error::{Error, Result};
pub use graph::{build_temporal_graph, TemporalGraph, Time, TimeEdge, Vertex};
pub use instance::{Instance, Mode, Solution};
pub use walk::{OccupancyInterval, TemporalWalk, Transition};

/// Budget override shared by the oracle and the enumerating solvers.
pub const BUDGET_ENV: &str = "TD_NODE_BUDGET";

/// Reads `TD_NODE_BUDGET`, falling back to `default` when unset or unparsable.
pub fn budget_from_env(default: u64) -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}
