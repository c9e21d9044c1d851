use crate::graph::{Time, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("self-loop at vertex {vertex} with label {t}")]
    SelfLoop { vertex: Vertex, t: Time },
    #[error("time edge {{{u},{v}}}@{t} given twice")]
    DuplicateTimeEdge { u: Vertex, v: Vertex, t: Time },
    #[error("label {t} outside [1, {lifetime}]")]
    TimeOutOfRange { t: Time, lifetime: Time },
    #[error("vertex {vertex} outside [0, {n})")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("walk has no transitions")]
    EmptyWalk,
    #[error("route step {from}->{to} is not an edge of the underlying graph")]
    RouteNotInUnderlyingGraph { from: Vertex, to: Vertex },
    #[error("vertex {0} is not on the line")]
    VertexNotOnLine(Vertex),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("resource limit: {what} exceeded {limit}")]
    ResourceLimit { what: &'static str, limit: u64 },
    #[error("pair {pair} has no route in the underlying graph")]
    NoRoute { pair: usize },
    #[error("underlying graph is not a line")]
    NotALine,
    #[error("item sizes sum to {sum}, expected {capacity}")]
    NotNormalized { sum: u64, capacity: u64 },
    #[error("bad assignment: {0}")]
    BadAssignment(String),
    #[error("not a multicolored clique: {0}")]
    NotAClique(String),
    #[error("expected {expected} walks, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
