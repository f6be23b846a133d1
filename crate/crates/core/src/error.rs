use std::fmt;

/// Error type shared by the engine modules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A divisor referenced a fiber component the surface model does not know.
    UnknownComponent(String),
    /// A tree violated a structural invariant (no root, two roots, cycles,
    /// nonreduced root, ...).
    BadTree(String),
    /// An operation was called with data outside its contract
    /// (genus condition violated, inadmissible Maroni invariant, ...).
    Contract(String),
    /// Failure while parsing a tree description file.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownComponent(id) => write!(f, "unknown fiber component `{id}`"),
            Error::BadTree(msg) => write!(f, "malformed fiber tree: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
