//! Numerical engine for iterated integrals with complex iteration counts.
//!
//! The crate evaluates integrals of the form ∫ F(z) (dz/z)^s along paths in
//! the punctured plane, where the exponent s is a complex number, and builds
//! on that to compute zeta and L-functions, multiple zeta values,
//! polylogarithms, analytic continuations to negative integers, and the
//! monodromy of polylogarithms.

pub mod arith;
pub mod character;
pub mod continuation;
pub mod engine;
pub mod error;
pub mod gamma;
pub mod laurent;
pub mod monodromy;
pub mod path;
pub mod poly;
pub mod power;
pub mod quad;
pub mod report;
pub mod series;
pub mod theta;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64;
