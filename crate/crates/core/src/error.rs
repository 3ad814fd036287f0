use num_bigint::BigUint;
use thiserror::Error;

use crate::syntax::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("enumeration would produce {count} items, more than the limit of {limit}")]
    BoundExceeded { count: BigUint, limit: u64 },

    #[error("cannot compose: target {left} does not match source {right}")]
    EndpointMismatch { left: String, right: String },

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("morphism is not cartesian")]
    NotCartesian,

    #[error("log aspect ratio is undefined at ({a}, {b})")]
    UndefinedAspect { a: BigUint, b: BigUint },

    #[error("width is undefined for a rectangle of length 0")]
    ZeroLength,

    #[error("the zero polynomial has no empirical distribution")]
    ZeroPolynomial,

    #[error("polynomial {0} has no draws, so its empirical distribution is undefined")]
    NoDraws(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("convex weights must be nonnegative and sum to 1, got {w1} and {w2}")]
    InvalidWeights { w1: String, w2: String },

    #[error("invalid global section {section:?} for {poly}")]
    InvalidSection { section: Vec<usize>, poly: String },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("duplicate draw id {0:?}")]
    DuplicateDraw(String),

    #[error("malformed sample row at line {line}: {reason}")]
    MalformedRow { line: u64, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
