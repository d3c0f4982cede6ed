use alloc::string::String;

use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope is lower-dimensional")]
    DegeneratePolytope,
    #[error("linear functional is not positive on the cone")]
    FunctionalNotPositive,
    #[error("point {0} does not lie in the cone")]
    PointOutsideCone(String),
    #[error("region is not cobounded: {0}")]
    NotCobounded(String),
    #[error("threshold search exceeded 2^64 times the starting level")]
    CapExceeded,
    #[error("regions live in different cones")]
    ConeMismatch,
    #[error("regions carry different level functionals")]
    FunctionalMismatch,
    #[error("expected {expected} arguments, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("scalar must be positive")]
    NonpositiveScalar,
    #[error("semigroup ideal is not primary: {0}")]
    NotPrimary(String),
    #[error("the zero polynomial has no valuation")]
    ZeroPolynomial,
    #[error("invalid term order: {0}")]
    InvalidOrder(String),
    #[error("generator is not contained in the maximal ideal")]
    NotInMaximalIdeal,
    #[error("no power of the maximal ideal up to degree {cap} lies in the ideal")]
    NotPrimaryWithinCap { cap: u32 },
    #[error("e(in(a^k))/k^n increased at k = {k}")]
    MonotonicityViolation { k: u32 },
    #[error("expected an integer multiplicity, got {0}")]
    NonIntegralMultiplicity(String),
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
}
