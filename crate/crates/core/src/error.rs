use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),

    #[error("not a group table: {0}")]
    NotAGroupTable(String),

    #[error("action is not a homomorphism: action[{i}]·action[{j}] != action[{ij}] mod {modulus}")]
    NotAHomomorphism {
        i: usize,
        j: usize,
        ij: usize,
        modulus: u64,
    },

    #[error("action matrix {index} is not invertible mod {modulus} (det = {det})")]
    NotInvertible { index: usize, modulus: u64, det: u64 },

    #[error("element is not valid in this group: {0}")]
    InvalidElement(String),

    #[error("measures live on different groups")]
    GroupMismatch,

    #[error("character set contains the trivial character 0")]
    ContainsZeroCharacter,

    #[error("character set is not closed under the dual action")]
    NotOrbitClosed,

    #[error("not a probability measure: {0}")]
    NotProbability(String),

    #[error("measure has empty support")]
    EmptySupport,

    #[error("eigenvalue iteration did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("log-scale tracking overflowed in Gelfand radius estimate")]
    Overflow,

    #[error("search budget of {0} elements exceeded")]
    BudgetExceeded(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
