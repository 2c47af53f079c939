use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse {what} from {text:?}: {reason}")]
    Parse {
        what: &'static str,
        text: String,
        reason: String,
    },
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
    #[error("invalid base pair: {0}")]
    InvalidBasePair(String),
    #[error("{value} lies outside {domain}")]
    OutOfDomain { value: String, domain: String },
    #[error("regime violated: {0}")]
    Regime(String),
    #[error("union of {left} and {right} is disconnected")]
    Disconnected { left: String, right: String },
    #[error("index {index} out of range for length {len}")]
    OutOfRange { index: usize, len: usize },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("depth {depth} exceeds the cap of {cap}")]
    DepthCap { depth: usize, cap: usize },
}

impl Error {
    /// Parse failures map to a different exit code than domain failures.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::ZeroDenominator(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
