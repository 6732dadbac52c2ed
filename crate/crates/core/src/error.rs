use thiserror::Error;

/// Errors raised by the library. Arithmetic overflow is not represented here:
/// coefficient and coordinate arithmetic panics on overflow instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interlacing coordinates must have odd length, got {0}")]
    EvenLength(usize),

    #[error("coordinates are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<i64>),

    #[error("multirectangular coordinates need |p| = |q| + 1, got |p| = {p}, |q| = {q}")]
    MultirectShape { p: usize, q: usize },

    #[error("invalid composition {0:?}: parts must be positive")]
    InvalidComposition(Vec<usize>),

    #[error("invalid partition {0:?}: rows must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid set composition: {0}")]
    InvalidSetComposition(String),

    #[error("element label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("cover relations contain a cycle")]
    Cycle,

    #[error("poset is not ranked: cover ({0}, {1}) does not rise exactly one level")]
    NotRanked(usize, usize),

    #[error("{what} out of supported range: {value}")]
    OutOfRange { what: &'static str, value: usize },

    #[error("series constant term must be 1 to invert")]
    NotInvertible,

    #[error("series degree caps differ: {0} vs {1}")]
    CapMismatch(usize, usize),

    #[error("substitution image for {0} is not a linear combination of letters")]
    NonlinearSubstitution(String),

    #[error("polynomial is not quasi-symmetric: {0}")]
    NotQuasiSymmetric(String),

    #[error("polynomial is not word quasi-symmetric: {0}")]
    NotWordQuasiSymmetric(String),

    #[error("polynomial must contain a single letter family, found {0}")]
    MixedFamilies(String),

    #[error("leading evaluation is ambiguous or not of Luoto shape: {0}")]
    LeadingEvaluation(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("linear system is singular")]
    Singular,

    #[error("solution is not integral: {0}")]
    NonIntegral(String),

    #[error("splitting produced a constraint system that is not a Luoto poset: {0}")]
    SplittingShape(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
