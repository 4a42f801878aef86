use thiserror::Error;

/// Failures raised by the algebra, loop and kinematics routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("non-finite coefficient")]
    NonFinite,
    #[error("division by zero")]
    DivisionByZero,
    #[error("point of norm {norm} lies outside the open unit ball")]
    OutsideDisk { norm: f64 },
    #[error("near-lightlike input (norm {norm})")]
    NearLightlike { norm: f64 },
    #[error("scale factor must be at least 1")]
    ZeroScale,
    #[error("loop division undefined (singular system)")]
    DivisionUndefined,
    #[error("scalar part {0} is not zero")]
    NonZeroScalarPart(f64),
    #[error("tree size {0} out of range")]
    TreeSize(usize),
    #[error("expected {expected} arguments, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(&'static str),
    #[error("invalid candidate: {0}")]
    InvalidCandidate(&'static str),
    #[error("parse error at byte {0}")]
    Parse(usize),
}

pub type Result<T> = core::result::Result<T, Error>;
