use thiserror::Error;

/// Errors raised while constructing or relabeling a [`crate::Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: u64, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("diagonal value d must be >= 1, got {0}")]
    InvalidDiagonal(u64),
    #[error("permutation covers {permutation} vertices but graph has {graph}")]
    SizeMismatch { permutation: usize, graph: usize },
    #[error("not a permutation of 1..={0}")]
    NotBijection(usize),
}

/// Errors raised by the algebraic traversal engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TraversalError {
    #[error("{mode} arithmetic cannot be used with the {variant} variant")]
    IncompatibleMode {
        variant: &'static str,
        mode: &'static str,
    },
    #[error("floating-point mode requires a regularization period >= 1")]
    MissingRegularization,
    #[error("step kernel expects the {expected} variant, config selects {actual}")]
    WrongVariant {
        expected: &'static str,
        actual: &'static str,
    },
    #[error("state vector has {actual} entries, graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("state vector arithmetic does not match the configured mode")]
    ModeMismatch,
    #[error("non-finite value at vertex {vertex} in iteration {iteration}")]
    NonFinite { vertex: u32, iteration: usize },
    #[error("unsigned sweep received a negative value at vertex {0}")]
    NegativeValue(u32),
    #[error("start vertex {start} out of range 1..={n}")]
    StartOutOfRange { start: u32, n: usize },
    #[error(
        "frontier {iteration} diverges from the combinatorial reference \
         (algebraic {algebraic:?}, combinatorial {reference:?})"
    )]
    ReferenceMismatch {
        iteration: usize,
        algebraic: Vec<u32>,
        reference: Vec<u32>,
    },
}

/// Errors raised by the text readers in [`crate::io`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: vertex label must be >= 1")]
    NonPositiveLabel { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: u32 },
    #[error("unsupported Matrix Market format: {0}")]
    Unsupported(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("invalid trace document: {0}")]
    Trace(String),
}

/// Errors raised by the random graph generator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
}

/// Errors raised by the brute-force chain enumerator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("chain enumeration is limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(u32),
}
