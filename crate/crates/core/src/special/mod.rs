//! Special functions: Gamma, Bessel `J_ν` and its zeros, adjacent Jacobi
//! polynomials, and the Hurwitz zeta function used to sum Bessel-zero tails.

pub mod bessel;
pub mod gamma;
pub mod jacobi;
pub mod zeta;

pub use bessel::{bessel_j, bessel_zeros, bessel_zeros_cached, BesselZeroTable};
pub use gamma::{ball_volume, gamma_fn, lambda_d, ln_gamma, sphere_area};
pub use jacobi::{
    cd_kernel, cd_kernel_sum, jacobi_deriv, jacobi_eval, jacobi_norm_ratio, jacobi_zeros,
    largest_zero, leading_coeff_ratio, JacobiBasis,
};
pub use zeta::{hurwitz_zeta, riemann_zeta};
