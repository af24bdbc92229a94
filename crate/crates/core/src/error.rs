use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid leaf count {0}")]
    InvalidLeafCount(usize),
    #[error("leaf counts differ: {0} vs {1}")]
    LeafCountMismatch(usize, usize),
    #[error("edge {edge} does not exist (tree has {count} internal edges)")]
    UnknownEdge { edge: usize, count: usize },
    #[error("tree is not binary")]
    NotBinary,
    #[error("invalid painted tree: {0}")]
    InvalidTree(String),
    #[error("cannot parse tree {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("weights must be positive integers")]
    NonPositiveWeight,
    #[error("parameter q = {0} out of range")]
    ParameterOutOfRange(String),
    #[error("expected {expected} crowns, got {got}")]
    CrownCount { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("polytope is empty")]
    EmptyPolytope,
    #[error("polytope is unbounded")]
    UnboundedPolytope,
    #[error("point violates inequality {0}")]
    InfeasiblePoint(usize),
    #[error("not a facet tree of CK({n}): {tree}")]
    ForeignFacet { n: usize, tree: String },
    #[error("nothing to export")]
    EmptyExport,
    #[error("zero hyperplane normal")]
    ZeroNormal,
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
}

pub type Result<T> = std::result::Result<T, Error>;
