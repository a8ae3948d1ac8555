use thiserror::Error;

/// Errors raised by the library.
///
/// The variants line up with the CLI exit codes: usage/input problems,
/// resource caps, and soundness aborts are kept apart so callers can
/// react to each differently.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition of an operation was violated by the caller.
    #[error("usage error: {0}")]
    Usage(String),

    /// An instance document failed validation.
    #[error("invalid instance field `{field}`: {message}")]
    Input { field: &'static str, message: String },

    /// An exhaustive enumeration would exceed its configured cap.
    #[error("resource cap exceeded: {what} is {actual}, cap is {cap}")]
    Resource {
        what: &'static str,
        actual: u128,
        cap: u128,
    },

    /// A proven implication failed on a concrete instance. This is always
    /// an implementation bug somewhere in the stack.
    #[error("soundness violation: {0}")]
    Soundness(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn input(field: &'static str, msg: impl Into<String>) -> Self {
        Error::Input {
            field,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
