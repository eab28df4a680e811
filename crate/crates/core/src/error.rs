use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("truncation loses parts: count {count} < {parts} parts")]
    TruncationLosesParts { count: usize, parts: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("charge ({0}, {1}) is not of the form sigma_t")]
    NotSigmaCharge(i64, i64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not a principal Phi_2n configuration: {0}")]
    NotPrincipalConfiguration(String),
    #[error("head {0} matches no column formula")]
    NoColumnFormula(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("symbolic entry {0} does not support arithmetic")]
    SymbolicArithmetic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
