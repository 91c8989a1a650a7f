use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation (non-finite,
    /// non-positive length, negative variance, bad grid...).
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// A field was requested at the location of its source.
    #[error("singular field: {0}")]
    Singularity(&'static str),
    /// The model is used outside its regime of validity.
    #[error("outside model validity: {0}")]
    Validity(&'static str),
    /// An operation was called with an argument its closed form does not cover.
    #[error("contract violation: {0}")]
    Contract(&'static str),
    /// A numerical precondition (step size, tolerance) does not hold.
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
    /// Adaptive quadrature ran out of its evaluation budget.
    #[error("quadrature did not converge after {evaluations} evaluations (error estimate {estimate:e})")]
    Convergence { evaluations: usize, estimate: f64 },
}
