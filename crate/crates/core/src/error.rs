//! Error types shared across the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by numerical kernels and evaluators.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("gamma pole at non-positive integer {0}")]
    Pole(Complex64),
    #[error("zero base with exponent of non-positive real part")]
    ZeroBase,
    #[error("quadrature did not contract below tolerance {tol:e} by level {level} (last delta {delta:e})")]
    NoConvergence { tol: f64, level: u32, delta: f64 },
    #[error("integrand has not decayed below tolerance at the truncation abscissa {cutoff}")]
    TailTooFat { cutoff: f64 },
    #[error("function evaluates non-finite on the sampling circle of radius {radius}")]
    RadiusError { radius: f64 },
    #[error("invalid rational series: {0}")]
    InvalidRational(String),
    #[error("trivial character has no associated series")]
    TrivialCharacter,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("character table is invalid: {0}")]
    InvalidCharacter(String),
    #[error("unsupported field discriminant {0} (must be a fundamental discriminant < 0)")]
    UnsupportedField(i64),
    #[error("coefficient index {requested} exceeds the sieve cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("series converges too slowly at the requested point")]
    SlowConvergence,
    #[error("closed form is singular at 1")]
    SingularAt1,
    #[error("exponent outside the convergence region: {0}")]
    ConvergenceConstraint(String),
    #[error("path passes through a singular point of the form")]
    PathThroughSingularity,
    #[error("segments do not concatenate: end {0} differs from start {1}")]
    DiscontinuousConcat(Complex64, Complex64),
    #[error("endpoint singularity is non-integrable along this path")]
    DivergentIntegral,
    #[error("depth {0} words are not supported (depth is capped at 2)")]
    DepthUnsupported(usize),
    #[error("domination hypothesis violated: sup |cumulative| = {sup:.6} >= margin * |total| = {threshold:.6}")]
    DominationViolated { sup: f64, threshold: f64 },
    #[error("series tail is not small at truncation order {order}: last term ratio {ratio:.3}")]
    TailNotSmall { order: usize, ratio: f64 },
    #[error("model has no closed form usable for continuation")]
    NoClosedForm,
    #[error("continuation formula has an uncancelled pole at positive integer {0}")]
    PositiveIntegerPole(u32),
    #[error("no Laurent data at 1 is attached to this model")]
    NoLaurentData,
    #[error("technical loop condition violated: |tail total| = {total:.6} <= sup cumulative = {sup:.6}")]
    TechnicalConditionViolated { total: f64, sup: f64 },
    #[error("no branch candidate matches within {budget:e}")]
    NoBranchMatch { budget: f64 },
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
