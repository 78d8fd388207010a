use thiserror::Error;

/// Errors surfaced by the exact-arithmetic kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at specialization: denominator vanishes at the given point")]
    PoleAtSpecialization,
    #[error("{0} is not a square of a rational number")]
    NotARationalSquare(String),
    #[error("dressing polynomial is not homogeneous")]
    NonHomogeneousDressing,
    #[error("element is not invariant under simultaneous rescaling of w1, w2")]
    NotInvariant,
}
