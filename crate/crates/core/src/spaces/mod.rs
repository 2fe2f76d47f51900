//! Scalar, vector, function, and seminorm machinery: concrete realizations
//! of the ambient space, the auxiliary graded space, and its neighborhood
//! balls, shared by every other module.

mod dyadic;
mod graded;
mod grid;
mod seminorm;
mod vector;

pub use dyadic::{eval_dyadic_poly, DyadicExponent, DyadicPolynomial};
pub use graded::{GradedSpace, Seminorm};
pub use grid::{sup_on_grid, CompactDiskGrid};
pub use seminorm::{sequence_norm, sequence_norm_exact, SequenceNorm};
pub use vector::{GridVector, Pos};

/// Errors from space-level evaluations.
#[derive(thiserror::Error, Debug)]
pub enum SpacesError {
    #[error("evaluation point {re} lies on the excluded ray (-inf, 0)")]
    ExcludedRay { re: f64 },
    #[error("dyadic exponent arithmetic overflowed")]
    ExponentOverflow,
    #[error("vector spans {rows} summand rows, not in embedded sequence space")]
    NotEmbedded { rows: usize },
    #[error("ball index {n} exceeds the materialized seminorm horizon {horizon}")]
    HorizonExceeded { n: usize, horizon: usize },
    #[error("norm parameter p = {p} is not a real number >= 1")]
    InvalidNormParameter { p: f64 },
    #[error("coefficient has no exact rational modulus")]
    NoExactModulus,
    #[error("exact norm is unsupported for p = {p}")]
    ExactNormUnsupported { p: f64 },
}
