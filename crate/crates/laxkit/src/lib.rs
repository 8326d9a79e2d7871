//! Multi-pole Lax matrices with rational or elliptic spectral parameter.
//!
//! The crate is organized in two layers. The numeric kernels — Jacobi theta
//! functions and their relatives ([`elliptic`]) and small dense complex linear
//! algebra with polynomial and torus root finding ([`linalg`]) — are generic
//! over the real scalar type through the [`Real`] trait. The integrable-systems
//! layers on top of them ([`poisson`], [`rational`], [`sklyanin`], [`chain`],
//! [`model`]) work in `f64` precision through the concrete aliases below, since
//! all verification tolerances live at that scale.

pub mod chain;
pub mod elliptic;
pub mod error;
pub mod linalg;
pub mod model;
pub mod poisson;
pub mod rational;
pub mod real;
pub mod sklyanin;

pub use error::{Error, Result};
pub use real::Real;

/// Double-precision complex scalar used by the verification layers.
pub type C64 = num_complex::Complex<f64>;
/// Single-precision complex scalar.
pub type C32 = num_complex::Complex<f32>;

/// Double-precision lattice data.
pub type LatticeParams64 = elliptic::LatticeParams<f64>;
/// Double-precision dense complex matrix.
pub type CMatrix64 = linalg::CMatrix<f64>;
/// Double-precision torus domain for root searches.
pub type TorusDomain64 = linalg::TorusDomain<f64>;
