//! Linear-programming lower bounds for the energy of Riesz and Gaussian
//! point configurations.
//!
//! The crate is organized bottom-up:
//! - [`special`]: Gamma, Bessel functions and zeros, adjacent Jacobi
//!   polynomials with their Christoffel–Darboux kernels.
//! - [`quadrature`]: the design bound `D(d,τ)`, the Levenshtein function
//!   and Levenshtein's 1/N-quadrature rules.
//! - [`energy`]: the universal lower bound for finite `N` and the
//!   asymptotic constants `Θ_{s,d}`, `ξ_{s,d}`, `A_{s,d}`, the Gaussian
//!   bound, the packing bound `L_d` and the ratio `B_d`.
//! - [`lattice`]: theta-series coefficients, Epstein zeta functions and
//!   the lattice constants `C̃_{s,d}`.
//! - [`report`]: serializable reports and the tables behind the CLI.

// NaN must fail range checks, so `!(x > 0.0)` forms are deliberate
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod dd;
pub mod energy;
pub mod error;
pub mod lattice;
pub mod quadrature;
pub mod report;
pub mod special;

pub use error::{Error, Result};
