use thiserror::Error;

/// Configuration and input errors. Decoding failures are not errors; they are
/// reported through the decode outcome types.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("extension degree {0} is outside the supported range 2..=16")]
    UnsupportedDegree(u32),
    #[error("polynomial {poly:#x} does not have degree {m}")]
    WrongPolyDegree { poly: u32, m: u32 },
    #[error("polynomial {poly:#x} is not primitive over GF(2) in degree {m}")]
    NotPrimitive { poly: u32, m: u32 },
    #[error("value {value} is not an element of a field of size {q}")]
    ElementOutOfRange { value: u32, q: usize },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("invalid code dimensions: need 1 <= k <= n <= q, got k={k}, n={n}, q={q}")]
    InvalidDimensions { n: usize, k: usize, q: usize },
    #[error("expected {expected} evaluation points, got {got}")]
    EvalPointCount { expected: usize, got: usize },
    #[error("evaluation point {0} appears more than once")]
    DuplicateEvalPoint(u16),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coordinate index {index} out of range for length {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("coordinate index {0} listed more than once")]
    DuplicateIndex(usize),
    #[error("need at least k={k} coordinates, got {got}")]
    TooFewCoordinates { k: usize, got: usize },

    #[error("component dimensions must satisfy k_a >= k_b >= k_z >= 1, got ({k_a}, {k_b}, {k_z})")]
    NotNested { k_a: usize, k_b: usize, k_z: usize },
    #[error("mixing coefficient must not be 0 or 1")]
    InvalidAlpha,

    #[error("code with {size} codewords exceeds the enumeration limit of {limit}")]
    EnumerationTooLarge { size: u128, limit: u128 },

    #[error("invalid channel: {0}")]
    InvalidChannel(String),
    #[error("number of trials must be at least 1")]
    NoTrials,
}

pub type Result<T> = std::result::Result<T, Error>;
