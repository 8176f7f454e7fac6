use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("incomparable sizes: partitions of {0} and {1}")]
    IncomparableSizes(u32, u32),

    #[error("{0} out of range")]
    OutOfRange(String),

    #[error("empty partition")]
    EmptyPartition,

    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),

    #[error("root system is reducible")]
    Reducible,

    #[error("not a subsystem of the root system: {0}")]
    NotSubsystem(String),

    #[error("{what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },

    #[error("Weyl group too large: order {order} exceeds cap {cap}")]
    WeylGroupTooLarge { order: u128, cap: usize },

    /// Two computation routes that must agree did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn cap(what: impl Into<String>, cap: usize) -> Self {
        Error::CapExceeded {
            what: what.into(),
            cap,
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::WeylGroupTooLarge { .. } => 3,
            Error::Internal(_) => 4,
            _ => 2,
        }
    }
}
