use thiserror::Error;

use crate::schur::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("weight {0} is not dominant (parts must be non-increasing)")]
    NotDominant(Weight),

    #[error("{name} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("weight {weight} outside computed table: {reason}")]
    OutsideTable { weight: Weight, reason: &'static str },

    #[error("cannot parse weight {0:?}")]
    ParseWeight(String),

    #[error("cannot parse Laurent polynomial {0:?}")]
    ParseLaurent(String),

    #[error("linear solve produced a non-integral coordinate for {0}")]
    NonIntegral(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_range(name: &'static str, value: i64, min: i64, max: i64) -> Result<()> {
    if value < min || value > max {
        return Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(())
}
