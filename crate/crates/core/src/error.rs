use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown family '{0}' (expected one of A, B, C, D, E, F, G)")]
    UnknownFamily(String),

    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidSpec { family: char, rank: usize, reason: String },

    #[error("root index {index} out of range (system has {len} positive roots)")]
    RootIndexOutOfRange { index: usize, len: usize },

    #[error("simple index {index} out of range for rank {rank}")]
    SimpleIndexOutOfRange { index: usize, rank: usize },

    #[error("operands belong to different root systems ({left} vs {right})")]
    MismatchedSystems { left: String, right: String },

    #[error("root set {0} is not closed under adding simple roots")]
    NotAnIdeal(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("chain is outside the pairing domain: {0}")]
    Domain(String),

    #[error("{0}")]
    WrongChainSpecies(String),

    #[error("chain limit of {0} exceeded; raise --max-chains to continue")]
    ChainLimitExceeded(u64),

    #[error("integer overflow while accumulating {0}")]
    Overflow(&'static str),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}
