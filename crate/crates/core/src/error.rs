use thiserror::Error;

use crate::history::ParseError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(
        "invalid configuration: draw size {draw_size} must be between 1 and pool size {pool_size}"
    )]
    InvalidConfig { pool_size: u32, draw_size: u32 },

    #[error("invalid draw: {0}")]
    InvalidDraw(String),

    #[error("invalid gap vector: {0}")]
    InvalidGaps(String),

    #[error("category {category} out of range for draw size {draw_size}")]
    CategoryOutOfRange { category: u32, draw_size: u32 },

    #[error("enumeration would visit {subsets} subsets, above the limit of {limit}")]
    EnumerationLimit { subsets: String, limit: u64 },

    #[error("no draws to compare")]
    EmptyObservations,

    #[error("observed counts cover {got} categories, expected {expected}")]
    ObservedShape { got: usize, expected: usize },

    #[error("unknown counting method `{0}`")]
    UnknownMethod(String),

    #[error("counting method `{0}` is already registered")]
    DuplicateMethod(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
