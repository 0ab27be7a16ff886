use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("{what}: {count} exceeds the enumeration cap of {cap}")]
    EnumerationCapExceeded {
        what: &'static str,
        count: usize,
        cap: usize,
    },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("subgroup is not normal in the given overgroup")]
    NotNormal,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("equation is not well defined modulo the unknown orders: {0}")]
    NotWellDefined(String),

    #[error("element is not constant on fusion classes: {0}")]
    NotFusionStable(String),

    #[error("integrality violated: {0}")]
    IntegralityViolation(String),

    #[error("split orders disagree: coherent {coherent}, Hom(G) {hom_g}, reduced {reduced}")]
    SplitMismatch {
        coherent: u64,
        hom_g: u64,
        reduced: u64,
    },

    #[error("vertex set is not closed under taking subgroups: {0}")]
    NotDownwardClosed(String),

    #[error("value is not a root of unity in the fixed cyclotomic ring: {0}")]
    NotRootOfUnity(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
