//! Crate-wide error type.
//!
//! Variants map onto the CLI exit-code contract: `Config` -> 1, `Data` -> 2,
//! `Numeric` -> 3.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Invalid configuration or invariant violation in user-supplied knobs.
    #[error("config error: {0}")]
    Config(String),

    /// Problems with input data: missing files, malformed CSV, bad labels.
    #[error("data error: {0}")]
    Data(String),

    /// Non-finite values escaping the numeric core (divergent training,
    /// objective returning NaN).
    #[error("numeric error: {0}")]
    Numeric(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn numeric(msg: impl Into<String>) -> Self {
        Error::Numeric(msg.into())
    }
}
