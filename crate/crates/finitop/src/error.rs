use thiserror::Error;

/// Library-wide error type. `Input` covers malformed or out-of-range
/// data, `Capacity` covers guard violations on enumeration sizes; the
/// CLI maps them to exit codes 2 and 3 respectively.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input: {0}")]
    Input(String),
    #[error("capacity: {0}")]
    Capacity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn capacity_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Capacity(msg.into()))
}
