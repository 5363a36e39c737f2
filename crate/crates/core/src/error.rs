use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent too large")]
    ExponentTooLarge,
    #[error("coefficient {coeff} has a pole at {point}")]
    Pole { coeff: String, point: String },
    #[error("coefficient {0} involves half-integer powers of q and has no rational value at a rational q")]
    HalfIntegerPower(String),
    #[error("specialization point {0} is outside (0, 1)")]
    PointOutOfRange(String),
    #[error("rank must be at least 2, got {0}")]
    BadRank(usize),
    #[error("generator index ({i},{j}) violates 1 <= j <= i <= {n}")]
    BadIndex { i: usize, j: usize, n: usize },
    #[error("U_q generator index {i} outside 1..={n}")]
    BadUqIndex { i: usize, n: usize },
    #[error("no straightening rule covers {0}")]
    Uncovered(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("type error: {0}")]
    Type(String),
    #[error("rewriting did not terminate within {0} steps")]
    RewriteLimit(usize),
}
