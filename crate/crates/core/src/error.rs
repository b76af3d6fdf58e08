use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("value {value} exceeds the set capacity {cap}")]
    Capacity { value: usize, cap: usize },

    #[error("a finite set must be nonempty")]
    EmptySet,

    #[error("empty interval [{lo}, {hi}]")]
    EmptyInterval { lo: usize, hi: usize },

    #[error("set {0} does not contain 0")]
    NotNormalized(String),

    #[error("set has {len} elements, at least {min} required")]
    TooSmall { len: usize, min: usize },

    #[error("n = {n} is above the enumeration bound {bound}; use Monte Carlo estimation instead")]
    EnumerationBound { n: usize, bound: usize },

    #[error("generators {0:?} have gcd > 1, so they do not generate a numerical monoid")]
    NotCofinite(Vec<u64>),

    #[error("generator list is empty or contains 0")]
    BadGenerators,

    #[error("{0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("alpha cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
