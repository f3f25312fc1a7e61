//! Finite orthogonal polynomials on the cone `{(x,t) : ‖x‖ ≤ t}` and on its
//! surface, with the one-variable, ball and harmonic building blocks,
//! exact quadrature, and polynomial-identity certification.

// Parameter checks are written as `!(x > bound)` so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod ball;
pub mod cli;
pub mod cone_solid;
pub mod cone_surface;
pub mod errata;
pub mod error;
pub mod gram;
pub mod harmonics;
pub mod polyalg;
pub mod quadrature;
pub mod scalars;
pub mod univariate;
pub mod verifier;

pub use error::{Error, Result};
