use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("0/0 is not a fraction")]
    BothZero,
    #[error("{0} and {1} are not Farey neighbours")]
    NotNeighbors(String, String),
    #[error("invalid flip word: {0}")]
    InvalidWord(String),
    #[error("{0} is outside the domain of this operation")]
    OutOfDomain(String),
    #[error("gradient {0} lies outside the region swept from the initial triangulation")]
    OutOfRegion(String),
    #[error("flip in direction {0} moves back toward the root")]
    MiddleFlip(u8),
    #[error("matrix matches {0} of the three intersection-matrix forms")]
    Unclassifiable(usize),
    #[error("segment endpoint ({0}, {1}) is not primitive")]
    NotPrimitive(String, String),
    #[error("star product needs two distinct words, got {0} twice")]
    EqualWords(String),
    #[error("triple has repeated entries: {0}")]
    TieBreak(String),
    #[error("value does not fit in a machine integer: {0}")]
    Overflow(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
