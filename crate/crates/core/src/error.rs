use thiserror::Error;

/// All failure modes of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a tree needs at least one vertex")]
    EmptyTree,
    #[error("n = {0} exceeds the supported maximum of {1} vertices")]
    TooManyVertices(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge set does not connect all {0} vertices")]
    Disconnected(usize),
    #[error("edge set contains a cycle")]
    CycleDetected,
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),
    #[error("vertex list is not a simple path in the tree")]
    NotAPath,
    #[error("center flag requires an odd number of path vertices, and vice versa")]
    BadParity,
    #[error("position k = {k} out of range for side lengths {q} and {p}")]
    IndexOutOfRange { k: usize, q: usize, p: usize },
    #[error("invalid branch selection: {0}")]
    InvalidBranchSelection(String),
    #[error("move is not applicable: {0}")]
    InvalidMove(String),
    #[error("arithmetic overflow in a distance computation")]
    Overflow,
    #[error("enumeration of {count} labeled trees exceeds the cap of {cap}")]
    TooLarge { count: u64, cap: u64 },
    #[error("extremality violated for degree sequence {sequence}: {detail}")]
    TheoremViolation { sequence: String, detail: String },
    #[error("invalid tree JSON: {0}")]
    InvalidJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
