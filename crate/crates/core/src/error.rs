use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),

    #[error("{x} is not an addable {d}-hook position of {beta}")]
    NotAddable { beta: String, x: usize, d: usize },

    #[error("the empty partition has no restrictions")]
    EmptyRestriction,

    #[error("d = {d} outside 1..={max} for n = {n}")]
    DOutOfRange { n: usize, d: usize, max: usize },

    #[error("partition {mu} has size {got}, expected {expected}")]
    SizeMismatch {
        mu: String,
        got: usize,
        expected: usize,
    },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid zeta: k = {k}, d = {d} (need 1 <= k <= d, gcd(k, d) = 1)")]
    InvalidZeta { k: usize, d: usize },

    #[error("generic degree left a non-polynomial quotient for {0}")]
    NonPolynomialDegree(String),

    #[error("invalid braid word: {0}")]
    InvalidBraidWord(String),

    #[error("malformed table: {0}")]
    MalformedTable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
