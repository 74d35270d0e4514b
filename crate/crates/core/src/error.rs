use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operator does not restrict to the given subspace")]
    RestrictionFailure,
    #[error("bialgebra has no antipode")]
    NoAntipode,
    #[error("left convolution inverse of the identity is not a right inverse")]
    AntipodeAsymmetry,
    #[error("coalgebra is not pointed over the base field: components cover {covered} of {dim} dimensions")]
    NotPointed { covered: usize, dim: usize },
    #[error("comultiplication is not cocommutative")]
    NotCocommutative,
    #[error("base fields differ: {0} vs {1}")]
    FieldMismatch(crate::field::Field, crate::field::Field),
    #[error("verification failed:\n{0}")]
    VerificationFailure(Box<VerificationReport>),
    #[error("morphisms are not parallel")]
    NotParallel,
    #[error("morphisms do not share a codomain")]
    CodomainMismatch,
    #[error("sub-Hopf brace is not normal")]
    NormalityFailure,
    #[error("pi composed with gamma is not the identity")]
    NotSplit,
    #[error("diagram does not commute: {0}")]
    NotCommutative(String),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("operation requires characteristic zero")]
    CharPositive,
    #[error("the action does not preserve the primitive elements")]
    ActionNotRestricting,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn failed(report: VerificationReport) -> Self {
        Error::VerificationFailure(Box::new(report))
    }
}
