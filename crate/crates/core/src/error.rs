use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("base ring mismatch")]
    BaseMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero polynomial has no root data")]
    ZeroPolynomial,
    #[error("derivation matrix is not constant: {0}")]
    NonConstantDerivation(String),
    #[error("unstable invariants: {0}")]
    UnstableInput(String),
    #[error("derivation matrix is not of scalar-plus-nilpotent form")]
    NotScalarPlusNilpotent,
    #[error("invalid monoid: {0}")]
    InvalidMonoid(String),
    #[error("not a submonoid: {0}")]
    NotSubmonoid(String),
    #[error("quotient unit formula mismatch at element {element}")]
    QuotientUnitsMismatch { element: usize },
    #[error("registry index {0} out of range")]
    BadIndex(usize),
    #[error("registry contradiction: pair ({left}, {right}) is both equivalent and separated")]
    RegistryContradiction { left: usize, right: usize },
    #[error("certificate failed verification between entries {left} and {right}")]
    CertificateInvalid { left: usize, right: usize },
    #[error("separation witness for ({left}, {right}) is not reproducible")]
    WitnessInvalid { left: usize, right: usize },
    #[error("json: {0}")]
    Json(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
