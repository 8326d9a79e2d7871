//! Lattice data: the modulus, truncation policy, and cached theta constants.

use super::theta::{theta_raw_derivs, ThetaChar};
use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;

/// Reject moduli flatter than this; the series convergence budget assumes it.
pub const MIN_IM_TAU: f64 = 0.05;

/// Cached theta constants at `z = 0` for one modulus.
#[derive(Debug, Clone, Copy)]
pub struct ThetaConsts<R: Real> {
    /// theta_00(0)
    pub t00: Complex<R>,
    /// theta_01(0)
    pub t01: Complex<R>,
    /// theta_10(0)
    pub t10: Complex<R>,
    /// theta_11'(0)
    pub t11_d1: Complex<R>,
    /// theta_11'''(0)
    pub t11_d3: Complex<R>,
}

impl<R: Real> ThetaConsts<R> {
    fn compute(tau: Complex<R>, tol: R) -> Result<Self> {
        let zero = Complex::new(R::zero(), R::zero());
        let t00 = theta_raw_derivs(ThetaChar::ZeroZero, zero, tau, 0, tol)?[0];
        let t01 = theta_raw_derivs(ThetaChar::ZeroOne, zero, tau, 0, tol)?[0];
        let t10 = theta_raw_derivs(ThetaChar::OneZero, zero, tau, 0, tol)?[0];
        let d = theta_raw_derivs(ThetaChar::OneOne, zero, tau, 3, tol)?;
        Ok(ThetaConsts {
            t00,
            t01,
            t10,
            t11_d1: d[1],
            t11_d3: d[3],
        })
    }
}

/// The modulus tau together with the truncation tolerance and cached
/// theta constants for tau and 2 tau.
#[derive(Debug, Clone)]
pub struct LatticeParams<R: Real> {
    tau: Complex<R>,
    trunc_tol: R,
    consts: ThetaConsts<R>,
    consts_2tau: ThetaConsts<R>,
}

impl<R: Real> LatticeParams<R> {
    /// Default series tolerance 1e-15, suitable for f64.
    pub fn new(tau: Complex<R>) -> Result<Self> {
        Self::with_tol(tau, R::of(1e-15))
    }

    pub fn with_tol(tau: Complex<R>, trunc_tol: R) -> Result<Self> {
        if !(tau.im >= R::of(MIN_IM_TAU)) {
            return Err(Error::NonConvergent(format!(
                "Im tau = {} below the floor {MIN_IM_TAU}",
                tau.im
            )));
        }
        if !(trunc_tol > R::zero()) {
            return Err(Error::NonConvergent("trunc_tol must be positive".into()));
        }
        let consts = ThetaConsts::compute(tau, trunc_tol)?;
        let two_tau = tau.scale(R::of(2.0));
        let consts_2tau = ThetaConsts::compute(two_tau, trunc_tol)?;
        Ok(LatticeParams {
            tau,
            trunc_tol,
            consts,
            consts_2tau,
        })
    }

    #[inline]
    pub fn tau(&self) -> Complex<R> {
        self.tau
    }

    #[inline]
    pub fn trunc_tol(&self) -> R {
        self.trunc_tol
    }

    /// Cached constants at modulus tau.
    #[inline]
    pub fn consts(&self) -> &ThetaConsts<R> {
        &self.consts
    }

    /// Cached constants at modulus 2 tau.
    #[inline]
    pub fn consts_2tau(&self) -> &ThetaConsts<R> {
        &self.consts_2tau
    }

    /// theta_char(z | tau).
    pub fn theta(&self, ch: ThetaChar, z: Complex<R>) -> Result<Complex<R>> {
        Ok(theta_raw_derivs(ch, z, self.tau, 0, self.trunc_tol)?[0])
    }

    /// Order-th derivative of theta_char at z, modulus tau (order 1..=3).
    pub fn theta_deriv(&self, ch: ThetaChar, z: Complex<R>, order: usize) -> Result<Complex<R>> {
        assert!(
            (1..=3).contains(&order),
            "derivative order must be in 1..=3"
        );
        Ok(theta_raw_derivs(ch, z, self.tau, order, self.trunc_tol)?[order])
    }

    /// theta_char(z | 2 tau).
    pub fn theta_2tau(&self, ch: ThetaChar, z: Complex<R>) -> Result<Complex<R>> {
        let two_tau = self.tau.scale(R::of(2.0));
        Ok(theta_raw_derivs(ch, z, two_tau, 0, self.trunc_tol)?[0])
    }

    /// Quadratic coefficient of the sigma prefactor: -theta_11'''(0) / (6 theta_11'(0)).
    pub fn eta1(&self) -> Complex<R> {
        -self.consts.t11_d3 / (self.consts.t11_d1.scale(R::of(6.0)))
    }

    /// Fourth powers of the even theta constants at modulus tau.
    pub fn quartics(&self) -> (Complex<R>, Complex<R>, Complex<R>) {
        let p4 = |c: Complex<R>| {
            let c2 = c * c;
            c2 * c2
        };
        (p4(self.consts.t00), p4(self.consts.t01), p4(self.consts.t10))
    }
}
