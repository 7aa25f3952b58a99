//! Crate-wide error type.

use crate::polyring::VarId;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("relation would make {0} and {1} mutually comparable")]
    CyclicRelation(usize, usize),
    #[error("label {label} out of range 1..={n}")]
    InvalidLabel { label: usize, n: usize },
    #[error("expected a set of size {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),
    #[error("not a permutation of 1..=n: {0}")]
    InvalidPermutation(String),
    #[error("variable {0} unbound at evaluation point")]
    UnboundVariable(VarId),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("polynomial is not symmetric in the requested block (swap {0} <-> {1} changes it)")]
    NotSymmetric(VarId, VarId),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("monomial is not a descent/ascent-bottom basis element: {0}")]
    NotInDab(String),
    #[error("grade mismatch: {0}")]
    InvalidGrade(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ground set too large: {0} > 64")]
    TooLarge(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
