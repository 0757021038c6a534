use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0}")]
    RankMismatch(String),

    #[error("no rule for loop class {0:?}")]
    UnknownLoopClass(String),

    #[error("diagram is not planar")]
    NotPlanar,

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("diagram is not colouring composable: {0}")]
    NotCC(String),

    #[error("element is not in the idempotent subalgebra: {0}")]
    NotInIdempotentSubalgebra(String),

    #[error("weight {l} out of range for m = {m}")]
    WeightOutOfRange { m: usize, l: i64 },

    #[error("parameter {0} must be nonzero")]
    ZeroParameter(String),

    #[error("zero denominator: negative power of {0} evaluated at 0")]
    ZeroDenominator(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
