use thiserror::Error;

/// Errors raised by the counting and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant term must be 1 or -1 for exact inversion, got {0}")]
    NonUnitConstantTerm(String),

    #[error("oracle bound exceeded: n = {n} > {max}")]
    OracleBoundExceeded { n: usize, max: usize },

    #[error("invalid mex parameters (A = {modulus}, a = {residue}): need 1 <= a <= A")]
    InvalidMexParams { modulus: u32, residue: u32 },

    #[error("invalid singular overpartition parameters (k = {k}, i = {i}): need k >= 3 and 1 <= i <= k/2")]
    InvalidSingularParams { k: u32, i: u32 },

    #[error("rank and crank are undefined for the empty partition")]
    EmptyPartition,

    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(u64),

    #[error("{x} has no inverse modulo {m}")]
    NotCoprime { x: i64, m: u64 },

    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),

    #[error("offset {numerator}/{denominator} is not an integer")]
    NonIntegralOffset { numerator: u64, denominator: u64 },

    #[error("argument {needed} exceeds series truncation order {order}")]
    TruncationTooSmall { needed: u64, order: usize },

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
