use thiserror::Error;

/// Errors surfaced by the exact-algebra layers.
#[derive(Debug, Error)]
pub enum CoreError {
    #[error("division by zero in Q(sqrt2, sqrt3)")]
    DivisionByZero,
    #[error("cannot reflect through the zero root")]
    ZeroRoot,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("extremal vector {label} failed verification: d(E{raising_index}) residual = {residual}")]
    ExtremalVerification {
        label: String,
        raising_index: usize,
        residual: String,
    },
    #[error("weight space {weight} reduced to dimension {dim}, expected {expected}")]
    WeightSpaceDimension {
        weight: String,
        dim: usize,
        expected: usize,
    },
}
