use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain where the operation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A recurrence step left a nonzero remainder. This can only come from an
    /// arithmetic fault, never from valid input.
    #[error("recurrence step for m={m}, i={i} is not integral (remainder {remainder})")]
    NonIntegralStep { m: u32, i: u32, remainder: String },

    #[error("adaptive quadrature did not converge within {budget} intervals (estimate {estimate:e}, error {error:e})")]
    Convergence {
        budget: usize,
        estimate: f64,
        error: f64,
    },

    #[error("cannot parse exact value {0:?}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
