use thiserror::Error;

/// Errors raised by the library. Outcomes that are part of a normal answer
/// (an infinite valuation, a divisor search that hit its cap) are modelled as
/// values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("a monomial ideal needs at least one generator")]
    EmptyGenerators,
    #[error("zero exponent vector would generate the unit ideal")]
    UnitIdeal,
    #[error("power of the maximal ideal needs mu >= 1")]
    ZeroPower,
    #[error("exponent must be strictly positive, found {0}")]
    NonPositiveExponent(String),
    #[error("a multiideal needs at least one factor")]
    NoFactors,
    #[error("weight vector must have a nonzero entry")]
    ZeroWeight,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("coefficient {coefficient} is not valid in {ring}")]
    InvalidCoefficient { coefficient: String, ring: String },
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: String, found: String },
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("exponent list is empty")]
    EmptyExponents,
    #[error("search bound must be at least 1")]
    ZeroBound,
    #[error("jet order vector has length {found}, multiideal has {expected} factors")]
    JetOrderLength { expected: usize, found: usize },
    #[error("polynomial reduces to zero modulo {p}; no jet system to compare")]
    DegenerateLift { p: u64 },
    #[error("term {term} has weight {weight} < {d} but coefficient {coefficient} is not divisible by {p}")]
    TruncationPrecondition {
        term: String,
        weight: u64,
        d: u64,
        coefficient: String,
        p: u64,
    },
    #[error("truncation degree {given} differs from the valuation {expected} of the reduction")]
    TruncationDegree { given: u64, expected: u64 },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
