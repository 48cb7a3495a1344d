use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{what}: instance has {n} vertices, limit is {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{what}: {count} candidate subsets exceed the enumeration limit {limit}")]
    TooManySubsets {
        what: &'static str,
        count: u128,
        limit: u128,
    },

    #[error("k = {k} is outside 0..={n}")]
    KOutOfRange { k: usize, n: usize },

    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("total arc weight times n overflows 64 bits")]
    WeightOverflow,

    #[error("unsupported: {0}")]
    Unsupported(&'static str),
}

/// Diagnostics produced while reading an instance file. Line numbers are
/// 1-based and refer to the physical line in the input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing 'p' header line")]
    MissingHeader,

    #[error("line {line}: malformed header: {reason}")]
    BadHeader { line: usize, reason: String },

    #[error("line {line}: second header line")]
    DuplicateHeader { line: usize },

    #[error("line {line}: malformed arc line: {reason}")]
    BadArcLine { line: usize, reason: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: duplicate arc ({u}, {v})")]
    DuplicateArc { line: usize, u: usize, v: usize },

    #[error("line {line}: negative weight {weight}")]
    NegativeWeight { line: usize, weight: String },

    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: i64, n: usize },

    #[error("line {line}: weight required by weighted header")]
    MissingWeight { line: usize },

    #[error("line {line}: weight given but header is unweighted")]
    UnexpectedWeight { line: usize },

    #[error("header declares {declared} arcs but body has {found}")]
    ArcCountMismatch { declared: usize, found: usize },

    #[error("total arc weight times n overflows 64 bits")]
    WeightOverflow,
}
