use crate::exactnum::{Param, Rational};

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unknown parameter `{0}` (expected one of e1, e2, s, lambda)")]
    UnknownParameter(String),
    #[error("unbound parameter `{0}`")]
    UnboundParameter(Param),
    #[error("kind mismatch: {generator} is not valid for {context}")]
    KindMismatch { generator: String, context: String },
    #[error("index {index} lies outside window [{lo}, {hi}]")]
    OutOfWindow { index: i64, lo: i64, hi: i64 },
    #[error("invalid window: lo = {lo} exceeds hi = {hi}")]
    InvalidWindow { lo: i64, hi: i64 },
    #[error("cochain is not homogeneous of degree {expected}")]
    NotHomogeneous { expected: i64 },
    #[error("family `{0}` is not graded; windowed H^2 needs a graded specialization")]
    UngradedFamily(String),
    #[error("singular curve: the discriminant vanishes")]
    SingularCurve,
    #[error("s = {0} lies on an exceptional line (s in {{1, -2, -1/2}})")]
    ExceptionalLine(Rational),
    #[error("e1 = {0} is an exceptional point of the curve C (e1 in {{1/2, -1, -1/4}})")]
    ExceptionalPoint(Rational),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid finite-dimensional algebra: {0}")]
    InvalidAlgebra(String),
}

pub type Result<T> = std::result::Result<T, Error>;
