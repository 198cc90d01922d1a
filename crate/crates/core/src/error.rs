//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A pattern window needs at least two values.
    #[error("invalid order {order}: a pattern window needs at least 2 values")]
    InvalidOrder { order: usize },

    /// Histogram orders are capped so the `n!` counter table stays bounded.
    #[error("unsupported order {order}: supported range is {min}..={max}")]
    UnsupportedOrder { order: usize, min: usize, max: usize },

    #[error("non-finite value {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("insufficient data: {required} points required, {available} available")]
    InsufficientData { required: usize, available: usize },

    #[error(
        "insufficient data at scale {scale}: {required} points required, \
         {available} remain after subsampling"
    )]
    InsufficientDataAtScale {
        scale: usize,
        required: usize,
        available: usize,
    },

    #[error("invalid scale {scale}: subsampling stride must be at least 1")]
    InvalidScale { scale: usize },

    #[error("invalid synthetic spec: {reason}")]
    InvalidSpec { reason: String },

    #[error("invalid parameter `{name}`: {reason}")]
    Parameter { name: &'static str, reason: String },

    #[error("timestamp count {timestamps} does not match value count {values}")]
    TimestampLength { values: usize, timestamps: usize },

    #[error("timestamps must be non-decreasing (violated at index {index})")]
    TimestampOrder { index: usize },

    #[error("histogram order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("schema error: {0}")]
    Schema(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed input: {0}")]
    Format(#[from] csv::Error),
}

impl Error {
    /// Stable machine-readable kind, used by the CLI error contract.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidOrder { .. } => "invalid-order",
            Error::UnsupportedOrder { .. } => "unsupported-order",
            Error::NonFinite { .. } => "invalid-input",
            Error::InsufficientData { .. } | Error::InsufficientDataAtScale { .. } => {
                "insufficient-data"
            }
            Error::InvalidScale { .. } => "invalid-scale",
            Error::InvalidSpec { .. } => "invalid-spec",
            Error::Parameter { .. } => "parameter",
            Error::TimestampLength { .. } | Error::TimestampOrder { .. } => "invalid-input",
            Error::OrderMismatch { .. } => "parameter",
            Error::Schema(_) => "schema",
            Error::Config(_) => "configuration",
            Error::Io(_) => "io",
            Error::Format(_) => "format",
        }
    }
}
