use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("variable index {index} out of range for a ring with {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("substituted polynomial involves the replaced variable {0}")]
    SubstitutionInvolvesVariable(String),
    #[error("point has {got} coordinates, ring has {expected} variables")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("invalid interval: lower endpoint must be below upper endpoint")]
    InvalidInterval,
    #[error("expected a polynomial in exactly two variables")]
    NotBivariate,
    #[error("genericity failure: {0}")]
    GenericityFailure(String),
    #[error("retry budget exhausted: {0}")]
    GenericityExhausted(String),
    #[error("eliminant degree {degree} exceeds the bound {bound}")]
    DegreeBoundViolated { degree: usize, bound: usize },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("line {line}: undeclared variable `{name}`")]
    UndeclaredVariable { line: usize, name: String },
    #[error("line {line}: malformed rational: {message}")]
    MalformedRational { line: usize, message: String },
    #[error("the system contains no polynomial")]
    EmptySystem,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by unlucky random choices that a fresh draw may fix.
    pub fn is_genericity_failure(&self) -> bool {
        matches!(self, Error::GenericityFailure(_))
    }
}
