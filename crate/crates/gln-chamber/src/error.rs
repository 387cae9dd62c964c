//! The crate-wide error type.

use thiserror::Error;

/// Errors reported by the constructors and operations of this crate.
///
/// Every operation validates its input constructively; invalid data never
/// reaches a downstream computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A partition had a zero part or was not sorted nonincreasingly.
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition {
        /// The offending parts.
        parts: Vec<u32>,
        /// Why they were rejected.
        reason: &'static str,
    },

    /// A numeric argument was outside its admissible range.
    #[error("argument `{name}` out of range: {reason}")]
    OutOfRange {
        /// Name of the argument.
        name: &'static str,
        /// Description of the admissible range.
        reason: String,
    },

    /// Structured input failed validation.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Two objects that must have matching sizes did not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch {
        /// The expected size.
        expected: usize,
        /// The size found.
        found: usize,
    },

    /// A lattice sequence was required to be strict (injective on a period).
    #[error("lattice sequence is not strict: quotient {step} of the period is zero")]
    NotStrict {
        /// The first residue with a zero quotient.
        step: usize,
    },

    /// A parabolic subgroup was requested for the full generating set.
    #[error("parabolic subgroup for S = {0:?} is infinite")]
    InfiniteParabolic(Vec<usize>),

    /// A relative Weyl group was not a product of symmetric groups on its
    /// orbits, so the group-algebra decomposition rule does not apply.
    #[error("stabilizer is not a product of symmetric groups: {0}")]
    NotYoungSubgroup(String),

    /// A chain complex violated the boundary condition or had inconsistent
    /// matrix shapes.
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),

    /// An induction table had no entry for a requested constituent.
    #[error("missing induction-table entry for {label} into {target}")]
    MissingTableEntry {
        /// The constituent being induced.
        label: String,
        /// The target facet.
        target: String,
    },

    /// A computed invariant disagreed with its predicted value.
    #[error("verification failed: {0}")]
    Mismatch(String),

    /// The request is outside the hypotheses of the construction.
    #[error("unsupported: {0}")]
    Unsupported(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
