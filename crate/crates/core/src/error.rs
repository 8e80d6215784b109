use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<u32>),
    #[error("inner partition {inner:?} is not contained in outer partition {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },
    #[error("cannot parse shape {input:?}: {reason}")]
    ShapeSyntax { input: String, reason: String },
    #[error("invalid filling: {0}")]
    InvalidFilling(String),
    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("polynomial is not symmetric: leading exponent {0:?} is not weakly decreasing")]
    NotSymmetric(Vec<u32>),
    #[error("tableau is not benign for index {0}")]
    NotBenign(u32),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
