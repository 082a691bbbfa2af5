use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("invalid radicand {0}: radicands must be at least 1")]
    InvalidRadicand(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{radicals} independent square roots exceed the configured bound of {bound}")]
    FieldDegreeExceeded { radicals: usize, bound: usize },
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("integer overflow in radicand")]
    Overflow,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("dimension {0} is too small for curvature computations (need at least 2)")]
    DimensionTooSmall(usize),
    #[error("invalid wedge basis: {0}")]
    Basis(String),
    #[error("invalid split: {0}")]
    Split(String),
    #[error("horizontal space must have dimension 2, found {0}")]
    Codimension(usize),
    #[error("the vertical space is not a subalgebra: [e{0}, e{1}] has a horizontal component along e{2}")]
    NotSubalgebra(usize, usize, usize),
    #[error("the split is not invariant under the curvature operator")]
    SplitNotInvariant,
    #[error("this check requires a conformal foliation")]
    ConformalityRequired,
    #[error("odd dimension {0} carries no almost complex structure")]
    OddDimension(usize),
    #[error("invalid almost complex structure: {0}")]
    InvalidComplexStructure(String),
    #[error("the almost complex structure is not adapted to the split")]
    NotAdapted,
    #[error("the almost complex structure is not compatible with the second fundamental form")]
    NotCompatible,
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("invalid catalog parameters: {0}")]
    InvalidParams(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
