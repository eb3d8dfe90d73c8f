use thiserror::Error;

/// Errors raised by constructors and operations of this crate.
///
/// Answers that are part of an operation's normal range (an unsolvable
/// linear system, a module that is not weakly projective, an inconclusive
/// isomorphism search) are returned as values, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("ring length must be positive")]
    ZeroLength,
    #[error("{p}^{n} exceeds the supported modulus bound 2^31")]
    RingTooLarge { p: u64, n: u32 },
    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: u64, modulus: u64 },
    #[error("operands live over different rings")]
    RingMismatch,
    #[error("operands are modules over different groups")]
    GroupMismatch,
    #[error("level {level} outside the allowed range {min}..={max}")]
    LevelOutOfRange { level: u32, min: u32, max: u32 },
    #[error("expected a module of level {expected}, got level {found}")]
    LevelMismatch { expected: u32, found: u32 },
    #[error("index {index} outside the allowed range {min}..={max}")]
    IndexOutOfRange { index: u32, min: u32, max: u32 },
    #[error("operation requires a cyclic group of order p = {p}, got a group of order {order}")]
    NotCyclicPrime { p: u64, order: usize },
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("homomorphism entry ({row}, {col}) = {value} violates the congruence constraint")]
    Congruence { row: usize, col: usize, value: u64 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map is not equivariant under generator {0}")]
    NotEquivariant(usize),
    #[error("sequence is not exact: {0}")]
    NotExact(String),
}

pub type Result<T> = std::result::Result<T, Error>;
