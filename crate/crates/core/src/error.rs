use thiserror::Error;

use crate::algebra::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-unit series power")]
    NonUnitSeries,

    #[error("exponential of a series with nonzero constant term")]
    NonNilpotentExponent,

    #[error("product formula factor has a monomial of total degree zero")]
    ZeroDegreeFactor,

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("partition {inner} is not contained in {outer}")]
    NotNested { outer: String, inner: String },

    #[error("empty nesting range: n1 = {n1} < n2 = {n2}")]
    EmptyNestingRange { n1: u32, n2: u32 },

    #[error("singular chart: ({0}, {1}) and ({2}, {3}) do not span the lattice")]
    SingularChart(i64, i64, i64, i64),

    #[error("trivial weight in Euler class")]
    TrivialWeight,

    #[error("degenerate specialization")]
    DegenerateSpecialization,

    #[error("degenerate specialization persisted after {0} redraws")]
    RetriesExhausted(usize),

    #[error("unknown surface `{0}`")]
    UnknownSurface(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("bundle has {got} divisor coefficients but the surface has {expected} rays")]
    BundleArity { expected: usize, got: usize },

    #[error("unknown bundle `{0}`")]
    UnknownBundle(String),

    #[error("non-constant localization sum: {first} vs {second}")]
    NonConstantLocalization { first: Rational, second: Rational },

    #[error("specialization disagreement: {first} vs {second}")]
    SpecializationDisagreement { first: Rational, second: Rational },

    #[error("localization sum has nonzero coefficient {value} in degree {degree} below {expected}")]
    SubDegreeResidue {
        degree: usize,
        expected: usize,
        value: Rational,
    },

    #[error("Heisenberg mode must be nonzero")]
    ZeroMode,

    #[error("lattice vector has {got} entries but the lattice has rank {expected}")]
    LatticeRank { expected: usize, got: usize },

    #[error("config: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
