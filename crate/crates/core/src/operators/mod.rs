//! The two operator families: the composition pair on dyadic polynomials
//! and the snake-shift pair on grid vectors, including the enumeration
//! builder that realizes the underlying grid bijection.

mod composition;
mod snake;

pub use composition::{compose_gamma, compose_square, compose_square_iter};
pub use snake::{
    build_snake_enumeration, snake_apply_s, snake_apply_s_pow, snake_apply_t, snake_apply_t_pow,
    transported_block, BuilderOptions, ExtendRule, GrowthBudget, ShiftParams, SnakeEnumeration,
    TargetSchedule,
};

use crate::spaces::Pos;

/// Errors from operator application and enumeration building.
#[derive(thiserror::Error, Debug)]
pub enum OperatorsError {
    #[error("shift weight must be real and strictly greater than 1, got {detail}")]
    InvalidLambda { detail: String },
    #[error("support position {pos} is not in the enumerated prefix")]
    UnenumeratedPosition { pos: Pos },
    #[error("enumeration too short: need index {index}, prefix length {len}")]
    EnumerationTooShort { index: usize, len: usize },
    #[error("target {k} is the zero vector and cannot be scheduled")]
    ZeroTarget { k: usize },
    #[error("target {k} has coefficient modulus {max_modulus} exceeding its index")]
    CoefficientBound { k: usize, max_modulus: f64 },
    #[error("scheduling failed at target {k}: launchpad end column {n_k} exceeds budget {bound}")]
    SchedulingFailure { k: usize, n_k: u64, bound: u64 },
    #[error("launchpad columns for target {k} would reach the run-column base {base}")]
    ColumnBudget { k: usize, base: u32 },
    #[error("no schedule for target index {k}")]
    ScheduleMissing { k: usize },
    #[error("builder self-check failed replaying target {k}")]
    BuilderVerification { k: usize },
    #[error("transport (i={i}, j={j}, k={k}) left row 1 despite k > i + j")]
    TransportOffRow { i: usize, j: usize, k: usize },
    #[error(
        "transport (i={i}, j={j}, k={k}) coefficient {max_modulus} exceeds bound {bound}"
    )]
    TransportBound {
        i: usize,
        j: usize,
        k: usize,
        max_modulus: f64,
        bound: f64,
    },
}
