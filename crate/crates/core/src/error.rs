use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),

    #[error("size mismatch: partition of {partition_n} against cycle type of {class_n}")]
    SizeMismatch { partition_n: u32, class_n: u32 },

    #[error("{0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("generating set is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("problem too large: {0}")]
    TooLarge(String),

    #[error("spectrum attribution failed: {0}")]
    Attribution(String),

    #[error("construction infeasible: {0}")]
    Infeasible(String),

    #[error("character cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
