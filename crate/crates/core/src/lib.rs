//! Integral solvability of binary quadratic Diophantine equations
//! `ax² + bxy + cy² + g = 0`.
//!
//! * [`arith`]: factorization, residue symbols, square roots mod p and
//!   factor-degree patterns over prime fields;
//! * [`localsolve`]: the reduced norm form and exact `ℤ_p` / `ℝ` solvability;
//! * [`pell`]: continued fractions of `√D`, Pell and negative Pell
//!   equations, class representatives of `x² − Dy² = N`;
//! * [`solver`]: global oracles, complete for definite forms and
//!   orbit-based for indefinite ones;
//! * [`criteria`]: Artin-condition criteria driven by ring class field data.
//!
//! The arithmetic is generic over [`Scalar`]; the aliases below pin the
//! unbounded instantiation used by the global solvers and criteria.

pub mod arith;
pub mod criteria;
pub mod error;
pub mod localsolve;
pub mod pell;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Unbounded integer used wherever values can outgrow machine words.
pub type Int = num_bigint::BigInt;
/// Equation with unbounded coefficients.
pub type Form = localsolve::QuadForm<Int>;
/// Equation with `i64` coefficients for small-range sweeps.
pub type SmallForm = localsolve::QuadForm<i64>;
