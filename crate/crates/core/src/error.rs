use thiserror::Error;

/// Everything that can go wrong in this crate: rejected arguments, rejected
/// run configurations, or a time integration that left the reals.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument violated a precondition.
    #[error("domain error: {name} = {value} {reason}")]
    Domain {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A grid or run configuration violated a precondition.
    #[error("configuration error: {0}")]
    Config(String),

    /// The evolved field picked up a non-finite value.
    #[error("numerical blow-up: non-finite field value at step {step}")]
    BlowUp { step: usize },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            reason,
        }
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
