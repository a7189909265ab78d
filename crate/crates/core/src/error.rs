use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the region where a formula or table is defined.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// `n` is larger than the factor table built for this run.
    #[error("{n} exceeds table limit {limit}")]
    Range { n: u64, limit: u64 },

    /// A floor-of-power decision stayed ambiguous at the largest allowed precision.
    #[error("floor of {base}^{exponent} undecided at {bits} bits")]
    PrecisionExhausted { base: u64, exponent: f64, bits: u32 },

    #[error("quadrature did not converge after {panels} panels (estimate {value}, error {error:e})")]
    Convergence { value: f64, error: f64, panels: usize },

    /// Direct enumeration would exceed the configured work cap.
    #[error("work {requested} exceeds cap {cap}")]
    Cost { requested: u128, cap: u128 },

    #[error("cache file: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
