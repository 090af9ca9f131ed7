use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("generator cone contains a line (not salient)")]
    NotSalient,
    #[error("zero vector supplied as generator (index {0})")]
    ZeroGenerator(usize),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("generator support {0:?} does not identify a face")]
    NotAFace(Vec<usize>),
    #[error("operation undefined for the trivial monoid")]
    TrivialMonoid,
    #[error("the zero face has no inner point")]
    ZeroFace,
    #[error("homomorphism is not strictly positive on generator {0}")]
    NotInteriorHom(usize),
    #[error("point lies outside the chart: kernel face {0:?} missing from the chain")]
    NotInChart(Vec<usize>),
    #[error("section does not match chain level {0}")]
    SectionMismatch(usize),
    #[error("no valid sample found for the stratum after {0} attempts")]
    EmptyStratum(usize),
    #[error("operation supports monoids of dimension <= 2, got {0}")]
    DimensionUnsupported(usize),
    #[error("ray {index} is not strictly inside the dual cone")]
    RayOutsideCone { index: usize },
    #[error("element is not in the monoid: {0:?}")]
    NotInMonoid(Vec<BigInt>),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
