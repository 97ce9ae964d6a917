use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a zero scalar")]
    DivisionByZero,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("undeclared parameter `{0}`")]
    UndeclaredParameter(String),
    #[error("denominator vanishes after substitution")]
    DenominatorVanishes,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("map is not an endomorphism of the ternary algebra")]
    NotAnEndomorphism,
    #[error("algebra is already twisted; twisting requires the identity twist pair")]
    AlreadyTwisted,
    #[error("triple is not compatible: {0}")]
    IncompatibleTriple(String),
    #[error("triple is degenerate (kernel of tau is trivial or everything)")]
    DegenerateTriple,
    #[error("kernel of tau is a proper nonzero subspace")]
    NotDegenerate,
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(String),
    #[error("polynomial map is not unimodular: det J = {0}")]
    NotUnimodular(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("invalid document at {location}: {message}")]
    Document { location: String, message: String },
}
