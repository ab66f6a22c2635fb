use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle")]
    CycleDetected,
    #[error("cover {0} -> {1} violates rank(y) = rank(x) + 1")]
    NotRanked(usize, usize),
    #[error("poset has no unique minimum")]
    NotBoundedBelow,
    #[error("poset has no unique maximum")]
    NotBounded,
    #[error("elements {0} and {1} are not comparable (x <= y required)")]
    NotComparable(usize, usize),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("block is empty")]
    EmptyBlock,
    #[error("block is signed")]
    SignedBlock,
    #[error("partitions live on different ground sets")]
    MismatchedGroundSet,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("edge is not a cover relation")]
    NotACover,
    #[error("cover {0} -> {1} has no label")]
    UnlabeledEdge(usize, usize),
    #[error("subposet is not ranked by restriction: {0}")]
    NotInducedRanked(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("face cap exceeded: more than {0} faces")]
    FaceCapExceeded(usize),
    #[error("element cap exceeded: more than {0} elements")]
    ElementCapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}
