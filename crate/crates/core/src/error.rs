use thiserror::Error;

/// Errors raised by the depth library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DepthError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("cap exceeded: {what} has size {size}, cap is {cap}; {hint}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("coincident point: index {0} equals the query point")]
    CoincidentPoint(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("empty point set")]
    Empty,

    #[error("evaluation failed on feature {feature} (sample {sample}): {source}")]
    Feature {
        feature: usize,
        sample: String,
        source: Box<DepthError>,
    },

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),
}

pub type Result<T, E = DepthError> = std::result::Result<T, E>;
