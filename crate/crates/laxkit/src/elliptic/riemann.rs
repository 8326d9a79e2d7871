//! The six Riemann theta relations (and their argument swaps) as residuals.

use super::lattice::LatticeParams;
use super::theta::ThetaChar;
use crate::error::Result;
use crate::real::Real;
use num_complex::Complex;

use ThetaChar::{OneOne as T11, OneZero as T10, ZeroOne as T01, ZeroZero as T00};

/// Each relation is c[k0] f[k1](u) f[k2](v) f[k3](u-v)
///               = c[k4] f[k5](u) f[k6](v) f[k7](u-v)
///          + sign * c[k8] f[k9](u) f[k10](v) f[k11](u-v),
/// encoded as (lhs triple, rhs triple 1, sign, rhs triple 2).
type Term = (ThetaChar, ThetaChar, ThetaChar, ThetaChar);

const RELATIONS: [(Term, Term, f64, Term); 6] = [
    (
        (T01, T01, T10, T10),
        (T10, T10, T01, T01),
        1.0,
        (T00, T00, T11, T11),
    ),
    (
        (T00, T10, T00, T10),
        (T10, T00, T10, T00),
        -1.0,
        (T01, T11, T01, T11),
    ),
    (
        (T01, T01, T00, T00),
        (T00, T00, T01, T01),
        1.0,
        (T10, T10, T11, T11),
    ),
    (
        (T00, T11, T01, T10),
        (T10, T01, T11, T00),
        1.0,
        (T01, T10, T00, T11),
    ),
    (
        (T01, T11, T00, T10),
        (T10, T00, T11, T01),
        1.0,
        (T00, T10, T01, T11),
    ),
    (
        (T01, T11, T10, T00),
        (T10, T00, T01, T11),
        1.0,
        (T00, T10, T11, T01),
    ),
];

fn term<R: Real>(
    t: Term,
    u: Complex<R>,
    v: Complex<R>,
    lat: &LatticeParams<R>,
) -> Result<Complex<R>> {
    let zero = Complex::new(R::zero(), R::zero());
    Ok(lat.theta(t.0, zero)? * lat.theta(t.1, u)? * lat.theta(t.2, v)? * lat.theta(t.3, u - v)?)
}

/// LHS - RHS of the six relations at (u', v') followed by the six with
/// u' and v' exchanged.
pub fn riemann_relation_residuals<R: Real>(
    u: Complex<R>,
    v: Complex<R>,
    lat: &LatticeParams<R>,
) -> Result<Vec<Complex<R>>> {
    let mut out = Vec::with_capacity(12);
    for (a, b) in [(u, v), (v, u)] {
        for &(lhs, r1, sgn, r2) in &RELATIONS {
            let l = term(lhs, a, b, lat)?;
            let r = term(r1, a, b, lat)? + term(r2, a, b, lat)?.scale(R::of(sgn));
            out.push(l - r);
        }
    }
    Ok(out)
}

/// Residuals normalized by the magnitude of each relation's largest term.
pub fn riemann_relative_residuals<R: Real>(
    u: Complex<R>,
    v: Complex<R>,
    lat: &LatticeParams<R>,
) -> Result<Vec<R>> {
    let mut out = Vec::with_capacity(12);
    for (a, b) in [(u, v), (v, u)] {
        for &(lhs, r1, sgn, r2) in &RELATIONS {
            let l = term(lhs, a, b, lat)?;
            let t1 = term(r1, a, b, lat)?;
            let t2 = term(r2, a, b, lat)?.scale(R::of(sgn));
            let scale = l.norm().max(t1.norm()).max(t2.norm()).max(R::of(1e-300));
            out.push((l - (t1 + t2)).norm() / scale);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C64;

    #[test]
    fn all_twelve_relations_hold() {
        let lat = LatticeParams::new(C64::new(0.0, 0.9)).unwrap();
        let u = C64::new(0.23, 0.1);
        let v = C64::new(0.41, -0.07);
        for (k, r) in riemann_relative_residuals(u, v, &lat).unwrap().iter().enumerate() {
            assert!(*r < 1e-10, "relation {k}: {r}");
        }
    }

    #[test]
    fn degenerate_equal_arguments_still_hold() {
        let lat = LatticeParams::new(C64::new(0.1, 1.2)).unwrap();
        let u = C64::new(0.29, 0.17);
        for (k, r) in riemann_relative_residuals(u, u, &lat).unwrap().iter().enumerate() {
            assert!(*r < 1e-10, "relation {k}: {r}");
        }
    }

    #[test]
    fn perturbed_constant_breaks_relation_one() {
        // relation 1 rebuilt by hand with theta_01(0) shifted by 1e-3
        let lat = LatticeParams::new(C64::new(0.0, 0.9)).unwrap();
        let u = C64::new(0.23, 0.1);
        let v = C64::new(0.41, -0.07);
        let t = |ch, z| lat.theta(ch, z).unwrap();
        use ThetaChar::*;
        let c01 = lat.consts().t01 + 1e-3;
        let lhs = c01 * t(ZeroOne, u) * t(OneZero, v) * t(OneZero, u - v);
        let rhs = lat.consts().t10 * t(OneZero, u) * t(ZeroOne, v) * t(ZeroOne, u - v)
            + lat.consts().t00 * t(ZeroZero, u) * t(OneOne, v) * t(OneOne, u - v);
        let scale = lhs.norm().max(rhs.norm());
        assert!((lhs - rhs).norm() / scale > 1e-5);
    }
}
