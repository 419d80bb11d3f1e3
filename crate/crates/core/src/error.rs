use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("generators have gcd {0} > 1; not a numerical semigroup")]
    NonCoprime(u64),
    #[error("complement of the gap set is not closed under addition ({a} + {b} = {sum} is a gap)")]
    NotASemigroup { a: u64, b: u64, sum: u64 },
    #[error("{0} is not a nonzero element of the semigroup")]
    NotAMember(i64),
    #[error("genus {genus} is too small; at least {required} is required")]
    GenusTooSmall { genus: usize, required: usize },
    #[error("the semigroup needs at least two minimal generators")]
    SingleGenerator,
    #[error(
        "negative T1 dimension in degree {degree}: #A = {a_count}, dim V = {v_dim}"
    )]
    FormulaInconsistency {
        degree: i64,
        a_count: usize,
        v_dim: usize,
    },
    #[error("genus {requested} exceeds the configured maximum {limit}")]
    GenusLimitExceeded { requested: usize, limit: usize },
    #[error("unknown family id {0}; expected 1 or 2")]
    BadFamilyId(u32),
    #[error("tau must be a positive integer, got {0}")]
    TauTooSmall(u32),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
    #[error("syzygy failed: {0}")]
    SyzygyFailure(String),
    #[error("divisor is not monic in {var}")]
    NotMonicInX { var: String },
    #[error("{first} and {second} have a common root")]
    CoprimalityFailure { first: String, second: String },
    #[error("smoothing parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("polynomial ring mismatch")]
    RingMismatch,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
}
