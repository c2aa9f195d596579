use alloc::string::String;
use core::fmt;

use crate::graph::{Edge, Vertex};
use crate::search::invariants::InvariantViolation;

/// Everything that can go wrong inside the engine.
///
/// Input problems (`VertexOutOfRange`, `SelfLoop`, ...) are caller errors.
/// `Contract` means an operation was called outside its precondition.
/// `Invariant` and `LooseCover` indicate a bug in the engine itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    VertexOutOfRange { vertex: Vertex, n: usize },
    SelfLoop(Vertex),
    DuplicateEdge(Edge),
    /// Two edges of a would-be matching share an endpoint.
    Overlap(Edge, Edge),
    EdgeNotInGraph(Edge),
    Capacity { what: &'static str, limit: usize, actual: usize },
    Contract(String),
    Invariant(InvariantViolation),
    LooseCover { matching: usize, bound: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for graph with {n} vertices")
            }
            Error::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            Error::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            Error::Overlap(a, b) => write!(f, "edges {a} and {b} share an endpoint"),
            Error::EdgeNotInGraph(e) => write!(f, "edge {e} is not in the graph"),
            Error::Capacity { what, limit, actual } => {
                write!(f, "{what} is {actual}, above the limit of {limit}")
            }
            Error::Contract(msg) => write!(f, "precondition violated: {msg}"),
            Error::Invariant(v) => write!(f, "search invariant violated: {v}"),
            Error::LooseCover { matching, bound } => write!(
                f,
                "odd-set cover bound {bound} does not match matching size {matching}"
            ),
        }
    }
}

impl core::error::Error for Error {}

impl From<InvariantViolation> for Error {
    fn from(v: InvariantViolation) -> Self {
        Error::Invariant(v)
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn contract(msg: impl Into<String>) -> Error {
    Error::Contract(msg.into())
}
