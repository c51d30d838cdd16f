use thiserror::Error;

use crate::exactlin::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not invertible")]
    NotInvertible(String),
    #[error("automorphism is not a bialgebra map: {0} fails")]
    NotBialgebraMap(String),
    #[error("automorphism does not commute with the antipode")]
    AntipodeNotCommuting,
    #[error("antipode is singular: braiding inverse unavailable (prebraided only)")]
    SingularAntipode,
    #[error("input not verified: {0}")]
    Unverified(String),
    #[error("missing structure: {0}")]
    Missing(String),
    #[error("{map} does not descend to the quotient (relation {relation:?})")]
    Descent { map: String, relation: Vec<Scalar> },
    #[error("structural failure: {0}")]
    Structural(String),
    #[error("no solution: {0}")]
    NoSolution(String),
}

pub type Result<T> = std::result::Result<T, Error>;
