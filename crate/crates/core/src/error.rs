use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {0}")]
    RankMismatch(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("parse error near `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("element is not in the subgroup generated by [1, z]: {0}")]
    NotInGPrime(String),
    #[error("not a cyclic structure: {0}")]
    NotCyclicStructure(String),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("invalid data: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
