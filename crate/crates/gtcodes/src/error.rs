//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("GF({p}^{s}) exceeds the table limit of 2^16 elements")]
    FieldTooLarge { p: u32, s: u32 },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("modulus is not primitive over GF({p})")]
    NotPrimitive { p: u32 },
    #[error("{m} does not divide the extension degree {s}")]
    NotADivisor { m: u32, s: u32 },
    #[error("exponent {value} out of range 0..{bound}")]
    ExponentOutOfRange { value: u32, bound: u32 },
    #[error("exponent vectors must have {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("a generalized toric code needs a nonempty exponent set")]
    EmptySupport,
    #[error("power-map exponent {i} is not coprime to {q1}")]
    NotCoprime { i: u64, q1: u32 },
    #[error("scaling tuple must have only nonzero coordinates")]
    ZeroScale,
    #[error("leading coefficient must be a nonzero element of GF({p}^{m})")]
    BetaOutsideSubfield { p: u32, m: u32 },
    #[error("generator rows are dependent: expected rank {expected}, got {actual}")]
    RankDeficient { expected: usize, actual: usize },
    #[error("enumerating {required} codewords exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("invalid weight distribution: {0}")]
    BadDistribution(String),
    #[error(
        "distance mismatch: direct enumeration gives {direct}, dual transform gives {via_dual}"
    )]
    DistanceMismatch { direct: usize, via_dual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
