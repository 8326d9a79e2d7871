//! The kernel functions built on theta_11: phi, E1, and Weierstrass sigma.

use super::lattice::LatticeParams;
use super::theta::{lattice_distance, ThetaChar};
use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;

const POLE_GUARD: f64 = 1e-10;

fn check_off_lattice<R: Real>(z: Complex<R>, lat: &LatticeParams<R>, what: &str) -> Result<()> {
    let d = lattice_distance(z, lat.tau());
    if d < R::of(POLE_GUARD) {
        return Err(Error::PoleAtArgument {
            arg: format!("{what} = {z}"),
            tol: POLE_GUARD,
        });
    }
    Ok(())
}

/// phi(w, z) = theta_11(w+z) theta_11'(0) / (theta_11(w) theta_11(z)).
///
/// Symmetric in (w, z), with a simple pole of unit residue at z = 0.
pub fn phi<R: Real>(w: Complex<R>, z: Complex<R>, lat: &LatticeParams<R>) -> Result<Complex<R>> {
    check_off_lattice(w, lat, "w")?;
    check_off_lattice(z, lat, "z")?;
    let num = lat.theta(ThetaChar::OneOne, w + z)? * lat.consts().t11_d1;
    let den = lat.theta(ThetaChar::OneOne, w)? * lat.theta(ThetaChar::OneOne, z)?;
    Ok(num / den)
}

/// E1(z) = theta_11'(z) / theta_11(z), the logarithmic derivative.
pub fn e1<R: Real>(z: Complex<R>, lat: &LatticeParams<R>) -> Result<Complex<R>> {
    check_off_lattice(z, lat, "z")?;
    let v = lat.theta(ThetaChar::OneOne, z)?;
    let d = lat.theta_deriv(ThetaChar::OneOne, z, 1)?;
    Ok(d / v)
}

/// Weierstrass sigma for the lattice Z + tau Z, normalized so
/// sigma(z) = z + O(z^5) near 0:
/// sigma(z) = exp(eta1 z^2) theta_11(z) / theta_11'(0) with
/// eta1 = -theta_11'''(0) / (6 theta_11'(0)).
pub fn sigma<R: Real>(z: Complex<R>, lat: &LatticeParams<R>) -> Result<Complex<R>> {
    let pref = (lat.eta1() * z * z).exp();
    if !pref.norm().is_finite() {
        return Err(Error::Overflow("sigma prefactor overflow".into()));
    }
    let v = lat.theta(ThetaChar::OneOne, z)?;
    Ok(pref * v / lat.consts().t11_d1)
}

/// sigma'(z) / sigma(z) = 2 eta1 z + E1(z).
pub fn sigma_log_deriv<R: Real>(z: Complex<R>, lat: &LatticeParams<R>) -> Result<Complex<R>> {
    Ok(lat.eta1() * z.scale(R::of(2.0)) + e1(z, lat)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;

    fn lat(tau: C64) -> LatticeParams<f64> {
        LatticeParams::new(tau).unwrap()
    }

    #[test]
    fn phi_has_unit_residue() {
        let l = lat(C64::new(0.0, 1.0));
        let v = phi(C64::new(0.3, 0.1), C64::new(1e-4, 0.0), &l).unwrap();
        assert!((v * 1e-4 - C64::new(1.0, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn phi_is_symmetric() {
        let l = lat(C64::new(0.0, 0.8));
        let w = C64::new(0.2, 0.0);
        let z = C64::new(0.37, 0.11);
        let a = phi(w, z, &l).unwrap();
        let b = phi(z, w, &l).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn phi_periodic_in_second_argument() {
        let l = lat(C64::new(0.1, 0.9));
        let w = C64::new(0.21, 0.05);
        let z = C64::new(0.33, 0.14);
        let a = phi(w, z + 1.0, &l).unwrap();
        let b = phi(w, z, &l).unwrap();
        assert!((a - b).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn phi_rejects_lattice_points() {
        let l = lat(C64::new(0.0, 1.0));
        let e = phi(C64::new(1.0, 0.0), C64::new(0.3, 0.0), &l);
        assert!(matches!(e, Err(crate::Error::PoleAtArgument { .. })));
    }

    #[test]
    fn e1_parity_and_periodicity() {
        let l = lat(C64::new(0.0, 1.0));
        let z = C64::new(0.31, 0.05);
        let a = e1(z, &l).unwrap();
        let b = e1(-z, &l).unwrap();
        assert!((a + b).norm() < 1e-12 * a.norm().max(1.0));
        let c = e1(z + 1.0, &l).unwrap();
        assert!((c - a).norm() < 1e-11 * a.norm().max(1.0));
    }

    #[test]
    fn e1_simple_pole_unit_residue() {
        let l = lat(C64::new(0.0, 1.0));
        let z = C64::new(1e-4, 0.0);
        let v = e1(z, &l).unwrap();
        assert!((v * z - C64::new(1.0, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn sigma_normalization() {
        let l = lat(C64::new(0.12, 0.95));
        let z = C64::new(1e-5, 0.0);
        let v = sigma(z, &l).unwrap();
        assert!((v / z - C64::new(1.0, 0.0)).norm() < 1e-8);
        let zero = sigma(C64::new(0.0, 0.0), &l).unwrap();
        assert!(zero.norm() < 1e-15);
    }

    #[test]
    fn sigma_is_odd() {
        let l = lat(C64::new(0.12, 0.95));
        let z = C64::new(0.23, 0.31);
        let a = sigma(z, &l).unwrap();
        let b = sigma(-z, &l).unwrap();
        assert!((a + b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn sigma_quasi_period_matches_prefactor() {
        let l = lat(C64::new(0.12, 0.95));
        let eta1 = l.eta1();
        for z in [C64::new(0.3, 0.2), C64::new(-0.1, 0.4), C64::new(0.05, -0.12)] {
            let lhs = sigma(z + 1.0, &l).unwrap() / sigma(z, &l).unwrap();
            let rhs = -(eta1 * (2.0 * z + 1.0)).exp();
            assert!((lhs - rhs).norm() < 1e-10 * rhs.norm(), "z = {z}");
        }
    }

    /// Truncated Weierstrass product over the lattice, an implementation-
    /// independent oracle (slowly convergent, so the tolerance is loose).
    fn sigma_product_oracle(z: C64, tau: C64, m: i64) -> C64 {
        let mut acc = z;
        for a in -m..=m {
            for b in -m..=m {
                if a == 0 && b == 0 {
                    continue;
                }
                let w = C64::new(a as f64, 0.0) + tau * b as f64;
                let r = z / w;
                acc *= (1.0 - r) * (r + r * r / 2.0).exp();
            }
        }
        acc
    }

    #[test]
    fn sigma_matches_lattice_product() {
        let tau = C64::new(0.12, 0.95);
        let l = lat(tau);
        for z in [C64::new(0.21, 0.1), C64::new(-0.17, 0.2), C64::new(0.1, -0.23)] {
            let a = sigma(z, &l).unwrap();
            let b = sigma_product_oracle(z, tau, 60);
            assert!((a - b).norm() < 1e-2 * a.norm(), "z = {z}: {a} vs {b}");
        }
    }

    #[test]
    fn sigma_log_deriv_matches_difference() {
        let l = lat(C64::new(0.12, 0.95));
        let z = C64::new(0.27, 0.18);
        let h = 1e-6;
        let fd = (sigma(z + h, &l).unwrap().ln() - sigma(z - h, &l).unwrap().ln()) / (2.0 * h);
        let an = sigma_log_deriv(z, &l).unwrap();
        assert!((fd - an).norm() < 1e-8 * an.norm().max(1.0));
    }
}
