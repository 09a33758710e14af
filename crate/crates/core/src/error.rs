use thiserror::Error;

/// Errors raised by the algebra and dynamics layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch")]
    FieldMismatch,

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid field: {0}")]
    InvalidField(String),

    /// Number of variables, point length or monomial order disagree.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("monomial order mismatch")]
    OrderMismatch,

    #[error("cycle detection requires a finite field")]
    CycleRequiresFiniteField,

    #[error("empty point set")]
    EmptyPointSet,

    #[error("progression not contained in S: {a}N+{b}")]
    ProgressionNotContained { a: usize, b: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
