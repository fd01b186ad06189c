use alloc::string::String;
use core::fmt;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid configuration: bad bounds, population too small, budget
    /// smaller than the population, dimension mismatch, empty sample.
    Config(String),
    /// A problem name that the catalog does not know.
    Catalog(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Catalog(msg) => write!(f, "catalog error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

/// Shorthand used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
