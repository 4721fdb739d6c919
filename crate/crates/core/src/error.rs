use thiserror::Error;

/// Errors raised by group construction and subgroup queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be positive")]
    EmptyDegree,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("malformed cycle notation at column {column}: {message}")]
    CycleSyntax { column: usize, message: String },

    #[error("point {point} repeated in cycle product")]
    RepeatedPoint { point: usize },

    #[error("point {point} exceeds degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: usize },

    #[error("subgroup is not normal in the given group")]
    NotNormal,

    #[error("subgroup is not contained in the given group")]
    NotSubgroup,

    #[error("not a chief factor: {0}")]
    NotChiefFactor(String),

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Short machine-readable code, used by JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyDegree => "empty-degree",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::CycleSyntax { .. } => "cycle-syntax",
            Error::RepeatedPoint { .. } => "repeated-point",
            Error::PointOutOfRange { .. } => "point-out-of-range",
            Error::CapExceeded { .. } => "cap-exceeded",
            Error::NotNormal => "not-normal",
            Error::NotSubgroup => "not-subgroup",
            Error::NotChiefFactor(_) => "not-chief-factor",
            Error::NotPrime(_) => "not-prime",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
            Error::Invariant(_) => "invariant",
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
