use thiserror::Error;

/// Errors produced by the parking engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A car prefers a vertex outside `[1, total]`. `car` is 1-based.
    #[error("car {car} prefers vertex {value}, which is outside the lot")]
    InvalidPreference { car: usize, value: usize },

    #[error("invalid lot: {0}")]
    InvalidLot(&'static str),

    #[error("invalid interval [{lo}, {hi}]")]
    InvalidInterval { lo: usize, hi: usize },

    /// The input does not park under the rule the operation requires.
    #[error("preference sequence is not a parking function for this rule")]
    NotAParkingFunction,

    #[error("preference sequence is not a contained k-Naples parking function")]
    NotContained,

    #[error("vertex {vertex} is not an endpoint of a Naples component")]
    EndpointNotComponentBoundary { vertex: usize },

    #[error("aim is only defined when the last tie change is -1")]
    WrongTieCase,

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(&'static str),

    /// Exhaustive work would exceed the configured candidate cap.
    #[error("{candidates} candidates exceed the cap of {cap}")]
    TooLarge { candidates: u128, cap: u128 },

    /// A structural property that the construction relies on did not hold.
    #[error("internal invariant violated: {0}")]
    BrokenInvariant(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
