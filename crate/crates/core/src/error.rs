use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid semigroup description: {0}")]
    InvalidSpec(String),
    #[error("the generator list is empty")]
    EmptyGenerators,
    #[error("monoid is not reduced: {0}")]
    NotReduced(String),
    #[error("two-generated presentation needs alpha > 1 and beta > 1 (got {alpha}, {beta})")]
    InvalidTwoGen { alpha: String, beta: String },
    #[error("operation `{op}` is not supported in {mode} mode")]
    UnsupportedMode { op: &'static str, mode: &'static str },
    #[error("operation requires a numerical semigroup")]
    NotNumerical,
    #[error("generators have gcd {0}, expected 1")]
    GcdNotOne(String),
    #[error("{0} is not an element of the semigroup")]
    NotMember(String),
    #[error("vectors of different lengths ({expected} vs {found})")]
    MixedArity { expected: usize, found: usize },
    #[error("search limit reached after {explored} nodes (limit {limit}); raise it with --limit")]
    ResourceLimit { explored: u64, limit: u64 },
    #[error("value too large for the residue tables: {0}")]
    TooLarge(String),
    #[error("bound {given} is below the sound bound {required}")]
    UnsoundBound { given: String, required: String },
    #[error("monoid is not quasi-Archimedean: {0}")]
    NotQuasiArchimedean(String),
    #[error("cross-check mismatch: {0}")]
    CrossCheckMismatch(String),
}

impl Error {
    pub(crate) fn resource(explored: u64, limit: u64) -> Self {
        Error::ResourceLimit { explored, limit }
    }
}
