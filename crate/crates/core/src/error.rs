use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violated a precondition (index range, sizes, finiteness, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An iterative method failed to converge.
    #[error("computation did not converge within {iterations} iterations: {what}")]
    NoConvergence { what: String, iterations: usize },
    /// Evaluation too close to a point where the quantity diverges.
    #[error("singular evaluation at {at}: {what}")]
    Singularity { what: String, at: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
