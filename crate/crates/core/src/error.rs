use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {0} repeated")]
    RepeatedPoint(usize),

    #[error("malformed element text `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("lattice axiom violated: {0}")]
    LatticeAxiom(String),

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("element {t} is not in the L-class of idempotent {e}")]
    NotInLClass { t: usize, e: usize },

    #[error("representation check failed: {0}")]
    Verification(String),

    #[error("monoid mismatch: {0} vs {1} elements")]
    MonoidMismatch(usize, usize),

    #[error("subspace is not invariant")]
    NotInvariant,

    #[error("null representation (dimension 0) is not allowed")]
    NullRepresentation,

    #[error("exterior power {p} out of range for dimension {dim}")]
    ExteriorOutOfRange { p: usize, dim: usize },

    #[error("unrecognized maximal subgroup structure at idempotent {0}")]
    UnrecognizedSubgroup(usize),

    #[error("decomposition failed: {0}")]
    SplitFailed(String),

    #[error("semisimplicity certificate was issued for a different monoid")]
    CertificateMismatch,

    #[error("support of the representation is not an upward-closed interval")]
    SupportNotInterval,
}

pub type Result<T> = std::result::Result<T, Error>;
