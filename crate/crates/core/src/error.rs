use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("polynomial is not monic of degree at least 1")]
    NonMonic,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("invalid object: {0}")]
    InvalidObject(String),
    #[error("characteristic {0} divides the group order")]
    ModularCharacteristic(u64),
    #[error("form is not Frobenius: the largest left ideal in its kernel has dimension {ideal_dim}")]
    NotFrobenius { ideal_dim: usize },
    #[error("functor rejected: {0}")]
    FunctorRejected(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
