use thiserror::Error;

/// Everything that can go wrong when building or combining signed permutations,
/// peak sets and extremal scans.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("value {0} appears more than once")]
    RepeatedValue(i64),
    #[error("value {value} is out of range for n = {n}")]
    OutOfRange { value: i64, n: usize },
    #[error("zero is not a valid entry")]
    ZeroEntry,
    #[error("invalid size n = {0}")]
    InvalidSize(usize),
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("generator index {k} out of range for n = {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("values {value} and {} occupy adjacent positions", value + 1)]
    AdjacentValues { value: usize },
    #[error("value {value} out of range for a peak-preserving swap at n = {n}")]
    ValueOutOfRange { value: usize, n: usize },
    #[error("the values -{n} and -{} are not both present", n.saturating_sub(1))]
    ValuesAbsent { n: usize },
    #[error("peak set {0} is not admissible")]
    Inadmissible(String),
    #[error("invalid peak set: {0}")]
    InvalidPeakSet(String),
    #[error("n = {n} is outside the supported range {min}..={max}")]
    SizeCap { n: usize, min: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
