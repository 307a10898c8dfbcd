use num::BigInt;
use thiserror::Error;

/// Errors produced by basis construction, enumeration and reduction.
#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("basis rows are linearly dependent over the rationals")]
    RankDeficient,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),
    #[error("vector does not lie in the real span of the basis")]
    NotInSpan,
    #[error("vector lies in the span but has non-integer coordinates")]
    NotInLattice,
    #[error("enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("brute-force box rejected: {0}")]
    BoxTooLarge(String),
    #[error("certificate does not match the basis: {0}")]
    CertificateMismatch(String),
    #[error("invalid profile entry k={k} at index i={i} (need 0 <= k <= i-1)")]
    InvalidProfile { i: usize, k: usize },
    #[error("failed to generate a nonsingular basis after {0} attempts")]
    GenerationFailed(u32),
    #[error("no sign change while bracketing the quartic root for n={0}")]
    NoSignChange(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
