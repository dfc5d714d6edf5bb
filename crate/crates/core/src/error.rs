use thiserror::Error;

/// Errors raised by the polynomial engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("Gröbner step budget of {budget} reduction steps exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("ideal has no cached Gröbner basis")]
    MissingBasis,

    #[error("ideal is the unit ideal; the scheme is empty")]
    EmptyScheme,

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("matrix is not {t}-homogeneous: the {size}x{size} minor on rows {rows:?}, columns {cols:?} is not homogeneous")]
    NotTHomogeneous {
        t: usize,
        size: usize,
        rows: Vec<usize>,
        cols: Vec<usize>,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("sampling failed: {0}")]
    Sampling(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("guardrail: {0} (pass --force to override)")]
    Guardrail(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
