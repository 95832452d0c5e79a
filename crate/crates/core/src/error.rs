use thiserror::Error;

/// Errors reported by the parking-sequence routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParkingError {
    #[error("instance must have at least one car")]
    NoCars,

    #[error("car {car} has length 0; lengths must be positive")]
    ZeroLength { car: usize },

    #[error("trailer parameter z must be at least 1")]
    ZeroTrailer,

    #[error("street length overflows")]
    StreetTooLong,

    #[error("preference sequence has {found} entries, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("preference at position {position} is 0; spots are numbered from 1")]
    ZeroPreference { position: usize },

    #[error("boundary vector must be non-empty, positive and non-decreasing")]
    InvalidBoundary,

    #[error("{0}")]
    OutOfDomain(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("search space of {needed} candidates exceeds the enumeration budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("exact division failed: {0}")]
    NonIntegral(String),
}

pub type Result<T> = std::result::Result<T, ParkingError>;
