use thiserror::Error;

/// Errors raised by the library.
///
/// `TheoremViolation` is never expected: it means a computed result contradicts
/// a proven statement and therefore points at a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("duplicate arc {0} -> {1}")]
    DuplicateArc(usize, usize),
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("cannot delete the last vertex")]
    LastVertex,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("digraph is not singular")]
    NotSingular,
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    DegreeViolation { vertex: usize, degree: usize },
    #[error("order {0} is odd")]
    OddOrder(usize),
    #[error("parameter {value} below minimum {min}")]
    TooSmall { value: usize, min: usize },
    #[error("bad connection set: {0}")]
    BadConnectionSet(String),
    #[error("no arc {0} -> {1}")]
    NoSuchArc(usize, usize),
    #[error("kernel vectors cannot be rescaled to agree on the exchanged arcs")]
    CompatibilityError,
    #[error("digraph is not an ambi-nut")]
    NotAmbiNut,
    #[error("digraph is not a bi-nut")]
    NotBiNut,
    #[error("kernel entries differ at {0} and {1}")]
    UnequalKernelEntries(usize, usize),
    #[error("gadget demand {found} does not match eigenvalue {expected}")]
    DemandMismatch { expected: String, found: String },
    #[error("expected {expected} gadgets, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("truncated payload: {0}")]
    TruncatedPayload(String),
}

pub type Result<T> = std::result::Result<T, Error>;
