//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::exactalg::Var;

pub type Result<T> = std::result::Result<T, HessexError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HessexError {
    #[error("invalid Hessenberg function {values:?}: {reason}")]
    InvalidHessenberg { values: Vec<usize>, reason: String },

    #[error("invalid permutation {values:?}: {reason}")]
    InvalidPermutation { values: Vec<usize>, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable {0} is not in the polynomial's universe")]
    UnknownVariable(Var),

    #[error("variable {0} has no value bound")]
    UnboundVariable(Var),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unimodular: {0}")]
    NotUnimodular(String),

    #[error("the zero polynomial has no lowest term")]
    ZeroPolynomial,

    #[error("indecomposable Hessenberg function required (h = {h}, h({j}) = {j})")]
    Decomposable { h: String, j: usize },

    #[error("operation requires a one-parameter family ideal")]
    NotFamily,

    #[error("values must be pairwise distinct: {0}")]
    RepeatedValues(String),

    #[error("fiber parameter z must be nonzero; use the t = 0 elimination instead")]
    ZeroFiber,

    #[error("weight vector {0} is not strictly decreasing")]
    NonStrictWeight(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("diagram of {0} is not a Young diagram")]
    NotYoung(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl HessexError {
    /// Stable snake_case tag used by the command-line front end.
    pub fn kind(&self) -> &'static str {
        match self {
            HessexError::InvalidHessenberg { .. } => "invalid_hessenberg",
            HessexError::InvalidPermutation { .. } => "invalid_permutation",
            HessexError::Parse(_) => "parse",
            HessexError::UnknownVariable(_) => "unknown_variable",
            HessexError::UnboundVariable(_) => "unbound_variable",
            HessexError::DimensionMismatch(_) => "dimension_mismatch",
            HessexError::NotUnimodular(_) => "not_unimodular",
            HessexError::ZeroPolynomial => "zero_polynomial",
            HessexError::Decomposable { .. } => "decomposable_hessenberg",
            HessexError::NotFamily => "not_family",
            HessexError::RepeatedValues(_) => "repeated_values",
            HessexError::ZeroFiber => "zero_fiber",
            HessexError::NonStrictWeight(_) => "non_strict_weight",
            HessexError::Inconsistent(_) => "inconsistent",
            HessexError::NotYoung(_) => "not_young",
            HessexError::InvalidArgument(_) => "invalid_argument",
        }
    }
}
