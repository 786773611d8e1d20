use thiserror::Error;

/// Errors raised by the library.
///
/// The split between [`Error::Guard`] and everything else matters to callers:
/// a guard refusal means the input was valid but exceeds a configured resource
/// bound, while every other variant means the input itself was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("place index {place} out of range for {places} place(s)")]
    PlaceOutOfRange { place: usize, places: usize },
    #[error("weight is not k-dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("weight is singular: {0}")]
    Singular(String),
    #[error("weight is not anti-dominant: {0}")]
    NotAntidominant(String),
    #[error("element is not central")]
    NotCentral,
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("{what} exceeds the resource guard ({value} > {limit}); set HWMLAB_GUARD_OVERRIDE to raise it")]
    Guard {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("q-precision {precision} is too low to certify the rank computation")]
    InsufficientPrecision { precision: usize },
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
