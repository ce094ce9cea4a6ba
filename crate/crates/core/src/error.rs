use thiserror::Error;

/// Enumeration ceilings. Operations that would walk more codewords or
/// subspaces than these caps refuse up front instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on q^k for full codeword enumeration.
    pub max_codewords: u128,
    /// Cap on the number of subspaces visited by a weight-hierarchy sweep.
    pub max_subspaces: u128,
}

impl Budget {
    pub const DEFAULT_MAX_CODEWORDS: u128 = 1 << 24;
    pub const DEFAULT_MAX_SUBSPACES: u128 = 1 << 27;
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_codewords: Self::DEFAULT_MAX_CODEWORDS,
            max_subspaces: Self::DEFAULT_MAX_SUBSPACES,
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field order {0} exceeds the supported maximum of 16")]
    OrderTooLarge(u64),

    #[error("{0} is not a prime power (supported orders: 2,3,4,5,7,8,9,11,13,16)")]
    NotPrimePower(u64),

    #[error("element code {code} is out of range for a field of order {q}")]
    ElementRange { code: u64, q: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("period is undefined: {0}")]
    PeriodUndefined(String),

    #[error("gcd(n, q) must be 1 (n = {n}, q = {q})")]
    NotCoprime { n: usize, q: u64 },

    #[error("{g} does not divide x^{n} - 1")]
    NotADivisor { g: String, n: usize },

    #[error("window width b = {b} is out of range 1..={n}")]
    WindowRange { b: usize, n: usize },

    #[error("subcode dimension r = {r} is out of range 1..={k}")]
    RankRange { r: usize, k: usize },

    #[error("budget exceeded: {what} needs {needed}, cap is {cap}")]
    Budget {
        what: String,
        needed: u128,
        cap: u128,
    },

    #[error("invalid parameters: {0}")]
    Invalid(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
