use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The combination is well-formed but not modelled (e.g. correlated ZF-SIC).
    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("correlation matrix is not positive semi-definite: {0}")]
    NonPsdCorrelation(String),

    /// Adaptive quadrature ran out of budget; `partial` is the best estimate so far.
    #[error("quadrature did not converge: {reason} (partial = {partial:e}, abs error = {abs_error:e})")]
    Quadrature {
        partial: f64,
        abs_error: f64,
        reason: String,
    },

    #[error("insufficient data: {0}")]
    InsufficientData(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

/// Returns an [`Error::InvalidParameter`] naming `condition` when it does not hold.
pub(crate) fn ensure(ok: bool, condition: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::invalid(format!("requires {condition}")))
    }
}
