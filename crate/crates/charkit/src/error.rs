//! Crate-wide error type and exit-code mapping.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed textual input (cycle notation, generator files, table files).
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input that violates a precondition.
    #[error("input error: {0}")]
    Input(String),

    /// Group closure exceeded the enumeration cap.
    #[error("group too large: closure exceeded cap of {cap} elements ({found} found so far)")]
    GroupTooLarge { cap: usize, found: usize },

    /// Brute-force oracle refused an oversized group.
    #[error("oracle cap exceeded: group order {order} > cap {cap}")]
    OracleCapExceeded { order: u64, cap: u64 },

    /// A lifted root-of-unity multiplicity fell outside [0, degree].
    #[error("lift failure: {0}")]
    LiftFailure(String),

    /// An internal consistency check failed; signals a bug or a bad prime,
    /// never a mathematical discovery.
    #[error("internal error: {0}")]
    Internal(String),

    /// A cross-check between two independent computations disagreed.
    #[error("verification inconsistency: {0}")]
    Inconsistency(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// CLI exit code: 1 = input error, 2 = computation error,
    /// 3 = verification inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_)
            | Error::Input(_)
            | Error::GroupTooLarge { .. }
            | Error::OracleCapExceeded { .. }
            | Error::Io(_) => 1,
            Error::LiftFailure(_) | Error::Internal(_) => 2,
            Error::Inconsistency(_) => 3,
        }
    }
}
