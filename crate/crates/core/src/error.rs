//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("factorization failed: {0}")]
    FactorizationFailed(String),

    #[error("polynomial is not integer-valued: {0}")]
    NotIntegerValued(String),

    #[error("profile search exceeded depth cap {cap} at prime {prime}")]
    DepthLimitExceeded { prime: u64, cap: u32 },

    #[error("atom enumeration hit the manual degree bound {bound}; completeness unknown")]
    AtomBoundExceeded { bound: u32 },

    #[error("prime characterizations disagree: {0}")]
    CrossCheckMismatch(String),

    #[error("class group contradicts the rank formula: {0}")]
    RankMismatch(String),

    #[error("generator is not a member of the ambient monoid: {0}")]
    NotMember(String),

    #[error("family hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
