//! Error type shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A denominator parameter hits a non-positive integer inside the
    /// summation range.
    #[error("pole: lower parameter {param} reaches a non-positive integer at term {index}")]
    Pole { param: String, index: u64 },

    #[error("series does not terminate: no upper parameter is a non-positive integer")]
    NotTerminating,

    #[error("outside convergence domain: {0}")]
    ConvergenceDomain(String),

    #[error("term budget {budget} exhausted before tail bound dropped below {target}")]
    BudgetExceeded { budget: u64, target: String },

    #[error("parameter outside domain: {0}")]
    Domain(String),

    #[error("singular parameter: {0}")]
    SingularParameter(String),

    #[error("unknown identity `{id}`; known identities: {known}")]
    UnknownIdentity { id: String, known: String },

    #[error("parameter binding rejected: {0}")]
    ParamDomain(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
