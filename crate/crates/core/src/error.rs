use thiserror::Error;

use crate::order::TermOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("malformed field spec {0:?}, expected \"q:<prime>\" or \"rational\"")]
    BadSpec(String),
    #[error("unknown term order {0:?}, expected lex, inlex or tdinlex")]
    UnknownOrder(String),
    #[error("modulus {0} is too large, prime fields require p < 2^31")]
    ModulusTooLarge(u64),
    #[error("malformed field literal {0:?}")]
    BadLiteral(String),
    #[error("binary operation {0} needs a second operand")]
    MissingOperand(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("point set is empty")]
    EmptySet,
    #[error("duplicate point on lines {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("operands belong to different field contexts")]
    ContextMismatch,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("exponent set is not a lower set")]
    NotLowerSet,
    #[error("point list does not start with the basis points in order")]
    OrderingViolation,
    #[error("sub point set is not contained in the full point set")]
    NotSubset,
    #[error("term order {0} is not supported by this algorithm")]
    UnsupportedOrder(TermOrder),
    #[error("dense oracle is capped at {cap} points, got {size}")]
    OracleCapExceeded { size: usize, cap: usize },
    #[error("cannot draw {requested} distinct points, only {available} exist")]
    TooManyPoints { requested: u64, available: u64 },
    #[error("inconsistent initial state: {0}")]
    BadState(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
