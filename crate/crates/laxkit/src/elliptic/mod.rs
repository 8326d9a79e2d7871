//! Jacobi theta functions with characteristics and the derived kernels
//! (phi, E1, Weierstrass sigma), plus the Riemann theta relations.
//!
//! Conventions follow Mumford: `theta[a,b](z|tau) = sum_n exp(pi i (n+a)^2 tau
//! + 2 pi i (n+a)(z+b))` with characteristics in {0, 1/2}, so `theta_11` is odd
//! and the other three are even. All series are summed after reducing the
//! argument to the fundamental domain and multiplying back the exact
//! quasi-periodicity factor.

mod kernels;
mod lattice;
mod riemann;
mod theta;

pub use kernels::{e1, phi, sigma, sigma_log_deriv};
pub use lattice::{LatticeParams, ThetaConsts, MIN_IM_TAU};
pub use riemann::{riemann_relation_residuals, riemann_relative_residuals};
pub use theta::{lattice_distance, theta_raw, theta_raw_derivs, ThetaChar};
