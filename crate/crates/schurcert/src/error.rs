use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{what}: requested {requested} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("characteristic must be 0 or a prime greater than {n}, got {ch}")]
    InvalidCharacteristic { ch: u64, n: usize },

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("{child:?} is not {parent:?} plus one box")]
    NotAddable { parent: Vec<usize>, child: Vec<usize> },

    #[error("expected a scalar multiple of the identity: {0}")]
    NonScalar(String),

    #[error("no witness found for lambda {lambda:?}, dimension {d}, branch {b}")]
    WitnessSearchFailed { lambda: Vec<usize>, d: i64, b: i64 },

    #[error("no counterexample family applies to lambda {lambda:?}, dimension {d}")]
    NoCounterexampleFamily { lambda: Vec<usize>, d: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
