use thiserror::Error;

/// Errors raised by the library. The CLI maps `Input` to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed user data: strings, JSON, flags.
    #[error("input error: {0}")]
    Input(String),
    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// Two objects built over different arrangements were combined.
    #[error("arrangement mismatch: {0} vs {1}")]
    ArrangementMismatch(String, String),
    /// A polytope whose normal fan does not coarsen the arrangement fan.
    #[error("not a deformation of the ambient zonotope: {0}")]
    NotDeformation(String),
    /// An enumeration or rank computation beyond its configured bound.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// An internal consistency check failed. Indicates a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
