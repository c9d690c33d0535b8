use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("modulus must be monic of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("field GF({p}^{e}) is outside the supported range")]
    FieldTooLarge { p: u32, e: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient {0} is not a valid field element")]
    InvalidElement(u64),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("no embedding of GF({small}) into GF({big})")]
    EmbeddingMissing { small: u64, big: u64 },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("invalid map: {0}")]
    InvalidMap(&'static str),
    #[error("image of the code under σ is not linear")]
    ImageNotLinear,
    #[error("codes must have equal dimension ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("enumeration of {words} codewords exceeds budget {budget}")]
    BudgetExceeded { words: u128, budget: u64 },
    #[error("code has no nonzero codewords")]
    NoNonzeroWords,
    #[error("gcd({0}, {1}) != 1")]
    GcdNotOne(i64, i64),
    #[error("constituent at {0} is neither zero nor the full ambient space")]
    ConstituentNotTrivial(usize),
    #[error("code is not cyclic (it has {0} blocks)")]
    NotCyclic(usize),
    #[error("block lengths are not pairwise coprime")]
    BlocksNotCoprime,
    #[error("block lengths are not pairwise distinct")]
    BlocksNotDistinct,
    #[error("block lengths are not all equal")]
    NotQuasiCyclic,
    #[error("component {0} is not Euclidean LCD")]
    ComponentNotLcd(usize),
    #[error("polynomial has no inverse modulo x^m - 1")]
    InverseMissing,
    #[error("degree of the minimal polynomial at {0} is odd")]
    DegreeOdd(usize),
    #[error("code is not closed under the group action")]
    NotAnIdeal,
    #[error("code is not closed under the block shift")]
    NotShiftClosed,
    #[error("group mismatch")]
    GroupMismatch,
    #[error("internal verification failed: {0}")]
    VerificationFailed(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
