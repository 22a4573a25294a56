use thiserror::Error;

/// Errors produced while loading, building or transforming complexes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("self-identified face: facet {facet} slot {slot} is glued to itself")]
    SelfIdentifiedFace { facet: usize, slot: usize },

    #[error("unglued slot: facet {facet} slot {slot}")]
    UngluedSlot { facet: usize, slot: usize },

    #[error("gluing involution violated at facet {facet} slot {slot}")]
    InvolutionViolation { facet: usize, slot: usize },

    #[error("codimension-1 face shared by {count} facets (facet {facet} slot {slot})")]
    NonManifoldRidge { facet: usize, slot: usize, count: usize },

    #[error("invalid gluing permutation at facet {facet} slot {slot}")]
    BadPermutation { facet: usize, slot: usize },

    #[error("facet {facet} repeats vertex {vertex}")]
    DegenerateFacet { facet: usize, vertex: String },

    #[error("unknown facet {0}")]
    UnknownFacet(usize),

    #[error("unknown face key {0}")]
    UnknownFace(String),

    #[error("subdivision too large: {projected} facets exceeds ceiling {ceiling}")]
    TooLarge { projected: u128, ceiling: u64 },

    #[error("join requires simplicial vertex format")]
    JoinNeedsVertexFormat,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("symmetric representation undefined: {0}")]
    SymRepUndefined(String),

    #[error("partition error: {0}")]
    Partition(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
