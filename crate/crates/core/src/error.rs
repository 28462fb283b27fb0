use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("{0} is not a prime")]
    PrimeRequired(u64),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("value is not p-local: {0}")]
    NotPLocal(String),
    #[error("zero input")]
    ZeroInput,
    #[error("reduction failure: {0}")]
    ReductionFailure(String),
    #[error("no Brauer correspondent: {0}")]
    NoCorrespondent(String),
    #[error("module splitting failed after {0} attempts")]
    SplitFailure(usize),
    #[error("inconsistent eigenvalue lift: {0}")]
    InconsistentLift(String),
    #[error("non-integral decomposition: {0}")]
    NonIntegralSolution(String),
    #[error("Brauer character linked to two blocks: {0}")]
    LinkageConflict(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("no invariant extension: {0}")]
    NoInvariantExtension(String),
    #[error("quotient is not a p-group: {0}")]
    QuotientNotPGroup(String),
    #[error("block is not invariant: {0}")]
    BlockNotInvariant(String),
    #[error("block has defect zero")]
    DefectZeroBlock,
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
