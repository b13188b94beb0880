//! Error taxonomy shared by every module.
//!
//! Two classes matter to callers: input errors (bad type/rank/level/vector,
//! a caller mistake) and consistency failures (an identity the library relies
//! on came out false, which means a bug or a falsified theorem). The CLI maps
//! the former to exit code 1 and the latter to exit code 2.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: requires {constraint}")]
    InvalidRank {
        family: char,
        rank: usize,
        constraint: &'static str,
    },

    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root of this root system")]
    NotARoot(String),

    #[error("degenerate Gram matrix: basis is not full rank in its span")]
    DegenerateGram,

    #[error("not a sublattice: basis vector {0} lies outside the ambient lattice")]
    NotASublattice(String),

    #[error("sublattice has infinite index (rank drop) in the ambient lattice")]
    NotFiniteIndex,

    #[error("quotient order {0} exceeds what coset enumeration supports")]
    QuotientTooLarge(String),

    #[error("{0} does not lie in the ambient lattice")]
    NotInLattice(String),

    #[error("Weyl group order exceeds the configured bound {0}")]
    WeylBoundExceeded(usize),

    #[error("level must be a positive integer")]
    InvalidLevel,

    #[error("weight {weight} violates the level constraint <weight, theta> = {pairing} > {level}")]
    WeightOutsideLevel {
        weight: String,
        pairing: String,
        level: u32,
    },

    #[error("index {0} is not in the simple-current index set I")]
    NotASimpleCurrentIndex(usize),

    #[error("coset index {index} out of range for a quotient of order {order}")]
    CosetOutOfRange { index: usize, order: u64 },

    #[error("malformed {kind} {text:?}: {reason}")]
    Parse {
        kind: &'static str,
        text: String,
        reason: String,
    },

    /// An internal identity failed. `identity` names the equation or theorem
    /// that was violated so diagnostics can point at the failing check.
    #[error("consistency failure [{identity}]: {detail}")]
    Consistency { identity: &'static str, detail: String },
}

impl Error {
    pub fn consistency(identity: &'static str, detail: impl Into<String>) -> Self {
        Error::Consistency {
            identity,
            detail: detail.into(),
        }
    }

    /// True for the error class that signals a falsified identity rather
    /// than bad input.
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency { .. })
    }
}
