use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be at least 1")]
    EmptyGroundSet,

    #[error("vertex label {label} is outside 1..={m}")]
    LabelOutOfRange { label: usize, m: usize },

    #[error("vertex {vertex} is not covered by any facet (isolated vertices must be given as singleton facets)")]
    UncoveredVertex { vertex: usize },

    #[error("expected {expected} level counts, got {got}")]
    LevelCountMismatch { expected: usize, got: usize },

    #[error("level count for variable {variable} must be at least 1")]
    InvalidLevel { variable: usize },

    #[error("design matrix would have {columns} columns, above the size cap of {cap}")]
    SizeCapExceeded { columns: u128, cap: u128 },

    #[error("complex is not Dehn-Sommerville; the alternating f-vector formula does not apply")]
    NotDehnSommerville,

    #[error("{family} family requires m >= {min}, got {m}")]
    FamilyTooSmall { family: &'static str, min: usize, m: usize },

    #[error("coefficient vector does not come from a simplicial complex: {0}")]
    InvalidVector(String),

    #[error("exhaustive enumeration is limited to m <= {max}, got {m}")]
    ExhaustiveTooLarge { m: usize, max: usize },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
