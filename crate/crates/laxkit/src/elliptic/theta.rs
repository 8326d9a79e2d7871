//! Theta series with characteristics, argument reduction, and term-wise
//! differentiated sums.

use crate::error::{Error, Result};
use crate::real::{cplx, Real};
use num_complex::Complex;

/// Hard cap on the number of summation shells.
const MAX_TERMS: usize = 512;
/// Overflow guard: reject |Im z| / Im tau beyond this before reduction.
const IM_RATIO_GUARD: f64 = 50.0;

/// The four theta characteristics in Mumford's labeling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ThetaChar {
    /// theta_00, even.
    ZeroZero,
    /// theta_01, even.
    ZeroOne,
    /// theta_10, even.
    OneZero,
    /// theta_11, odd.
    OneOne,
}

impl ThetaChar {
    pub const ALL: [ThetaChar; 4] = [
        ThetaChar::ZeroZero,
        ThetaChar::ZeroOne,
        ThetaChar::OneZero,
        ThetaChar::OneOne,
    ];

    /// First characteristic (0 or 1/2).
    #[inline]
    pub fn a<R: Real>(self) -> R {
        match self {
            ThetaChar::ZeroZero | ThetaChar::ZeroOne => R::zero(),
            ThetaChar::OneZero | ThetaChar::OneOne => R::of(0.5),
        }
    }

    /// Second characteristic (0 or 1/2).
    #[inline]
    pub fn b<R: Real>(self) -> R {
        match self {
            ThetaChar::ZeroZero | ThetaChar::OneZero => R::zero(),
            ThetaChar::ZeroOne | ThetaChar::OneOne => R::of(0.5),
        }
    }

    /// True for the odd characteristic theta_11.
    #[inline]
    pub fn is_odd(self) -> bool {
        matches!(self, ThetaChar::OneOne)
    }
}

/// Distance from `z` to the nearest point of `Z + tau Z`.
pub fn lattice_distance<R: Real>(z: Complex<R>, tau: Complex<R>) -> R {
    let m = (z.im / tau.im).round();
    let z1 = z - tau.scale(m);
    let k = z1.re.round();
    let z0 = z1 - Complex::new(k, R::zero());
    // neighbouring representatives can be closer for oblique lattices
    let mut best = z0.norm();
    for dm in [-R::one(), R::zero(), R::one()] {
        for dk in [-R::one(), R::zero(), R::one()] {
            let cand = (z0 - tau.scale(dm) - Complex::new(dk, R::zero())).norm();
            if cand < best {
                best = cand;
            }
        }
    }
    best
}

/// Sums the reduced series and its term-wise derivatives up to `order`.
///
/// Expects `z0` already reduced; returns `[S, S', ..., S^(order)]` where
/// `S(z) = sum_n exp(pi i (n+a)^2 tau + 2 pi i (n+a)(z+b))`.
fn series_derivs<R: Real>(
    ch: ThetaChar,
    z0: Complex<R>,
    tau: Complex<R>,
    order: usize,
    tol: R,
) -> Result<Vec<Complex<R>>> {
    let a: R = ch.a();
    let b: R = ch.b();
    let pii = cplx::<R>(0.0, std::f64::consts::PI);
    let two = R::of(2.0);
    let mut sums = vec![Complex::<R>::new(R::zero(), R::zero()); order + 1];
    let mut max_term = R::zero();
    let stop_frac = tol * R::of(0.25);

    let mut small_streak = 0usize;
    for shell in 0..MAX_TERMS {
        let mut shell_max = R::zero();
        let ns: &[i64] = if shell == 0 {
            &[0]
        } else {
            &[shell as i64, -(shell as i64)]
        };
        for &n in ns {
            let nf = R::of(n as f64) + a;
            let expo =
                pii * (tau.scale(nf * nf) + (z0 + Complex::new(b, R::zero())).scale(two * nf));
            let base = expo.exp();
            let mag = base.norm();
            if !mag.is_finite() {
                return Err(Error::Overflow(format!(
                    "theta series term overflow at n={n}"
                )));
            }
            if mag > shell_max {
                shell_max = mag;
            }
            let step = pii.scale(nf * two); // d/dz of the exponent
            let mut coef = Complex::new(R::one(), R::zero());
            for s in sums.iter_mut() {
                *s = *s + coef * base;
                coef = coef * step;
            }
        }
        if shell_max > max_term {
            max_term = shell_max;
        }
        if shell >= 2 && shell_max < stop_frac * max_term {
            small_streak += 1;
            if small_streak >= 2 {
                return Ok(sums);
            }
        } else {
            small_streak = 0;
        }
    }
    Err(Error::NonConvergent(format!(
        "theta series did not meet tolerance {tol} within {MAX_TERMS} shells"
    )))
}

/// Binomial coefficient for the small orders used here.
fn binom(n: usize, k: usize) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

/// Theta function and derivatives up to `order`, with argument reduction.
///
/// Returns `[theta, theta', ..., theta^(order)]` evaluated at `z`.
pub fn theta_raw_derivs<R: Real>(
    ch: ThetaChar,
    z: Complex<R>,
    tau: Complex<R>,
    order: usize,
    tol: R,
) -> Result<Vec<Complex<R>>> {
    if !(tau.im > R::zero()) {
        return Err(Error::NonConvergent(format!(
            "Im tau = {} must be positive",
            tau.im
        )));
    }
    if (z.im / tau.im).abs() > R::of(IM_RATIO_GUARD) {
        return Err(Error::Overflow(format!(
            "|Im z| / Im tau = {} exceeds the reduction guard {IM_RATIO_GUARD}",
            (z.im / tau.im).abs()
        )));
    }
    let m = (z.im / tau.im).round();
    let z1 = z - tau.scale(m);
    let k = z1.re.round();
    let z0 = z1 - Complex::new(k, R::zero());

    let series = series_derivs(ch, z0, tau, order, tol)?;

    let a: R = ch.a();
    let b: R = ch.b();
    let pii = cplx::<R>(0.0, std::f64::consts::PI);
    let two = R::of(2.0);
    // theta(z) = g * theta(z0) with g = exp(2 pi i a k - pi i m^2 tau - 2 pi i m (z0 + b))
    let g_exponent = pii
        * (Complex::new(two * a * k, R::zero())
            - tau.scale(m * m)
            - (z0 + Complex::new(b, R::zero())).scale(two * m));
    let g = g_exponent.exp();
    if !g.norm().is_finite() {
        return Err(Error::Overflow(
            "quasi-periodicity factor overflow".to_string(),
        ));
    }
    let beta = pii.scale(-two * m); // g'/g

    let mut out = Vec::with_capacity(order + 1);
    for kk in 0..=order {
        let mut acc = Complex::new(R::zero(), R::zero());
        let mut beta_pow = Complex::new(R::one(), R::zero());
        // sum over j from kk down to 0 so beta powers build up
        for j in (0..=kk).rev() {
            acc = acc + series[j].scale(R::of(binom(kk, j))) * beta_pow;
            beta_pow = beta_pow * beta;
        }
        let val = g * acc;
        if !val.norm().is_finite() {
            return Err(Error::Overflow("theta value overflow".to_string()));
        }
        out.push(val);
    }
    Ok(out)
}

/// Theta function value, with argument reduction.
pub fn theta_raw<R: Real>(
    ch: ThetaChar,
    z: Complex<R>,
    tau: Complex<R>,
    tol: R,
) -> Result<Complex<R>> {
    Ok(theta_raw_derivs(ch, z, tau, 0, tol)?[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::LatticeParams;
    use num_complex::Complex64 as C64;

    fn lat(tau: C64) -> LatticeParams<f64> {
        LatticeParams::new(tau).unwrap()
    }

    #[test]
    fn theta11_vanishes_at_origin() {
        let l = lat(C64::new(0.0, 0.5));
        let v = l.theta(ThetaChar::OneOne, C64::new(0.0, 0.0)).unwrap();
        assert!(v.norm() < 1e-12, "theta_11(0) = {v}");
    }

    #[test]
    fn integer_shift_is_exact_for_theta00() {
        let l = lat(C64::new(0.0, 1.0));
        let z = C64::new(0.3, 0.2);
        let a = l.theta(ThetaChar::ZeroZero, z + 1.0).unwrap();
        let b = l.theta(ThetaChar::ZeroZero, z).unwrap();
        assert!((a - b).norm() < 1e-12 * b.norm());
    }

    #[test]
    fn jacobi_quartic_identity() {
        let l = lat(C64::new(0.0, 1.0));
        let (q00, q01, q10) = l.quartics();
        assert!((q00 - q01 - q10).norm() < 1e-12 * q00.norm());
    }

    #[test]
    fn theta00_at_origin_matches_reference() {
        // pi^(1/4) / Gamma(3/4), partial q-series summed to < 1e-16
        let l = lat(C64::new(0.0, 1.0));
        let v = l.theta(ThetaChar::ZeroZero, C64::new(0.0, 0.0)).unwrap();
        assert!((v - C64::new(1.0864348112133080, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn generic_point_values_match_reference() {
        // independently computed from the defining series at 30 digits
        let l = lat(C64::new(0.3, 0.8));
        let z = C64::new(0.23, 0.11);
        let cases = [
            (ThetaChar::ZeroZero, C64::new(1.112219222726765271577, -0.04997430606108915833033)),
            (ThetaChar::ZeroOne, C64::new(0.8880195370348418323285, 0.05024658287851183343308)),
            (ThetaChar::OneZero, C64::new(0.8925822636202343897758, -0.04533915983181548550677)),
            (ThetaChar::OneOne, C64::new(-0.6622919748559271262473, -0.4386066685932724022586)),
        ];
        for (ch, want) in cases {
            let got = l.theta(ch, z).unwrap();
            assert!((got - want).norm() < 1e-14 * want.norm(), "{ch:?}: {got} vs {want}");
        }
    }

    #[test]
    fn deriv_at_origin_and_product_identity() {
        let l = lat(C64::new(0.0, 1.0));
        let d1 = l.consts().t11_d1;
        assert!((d1 - C64::new(-2.8486946039877873, 0.0)).norm() < 1e-13);
        let prod = l.consts().t00 * l.consts().t01 * l.consts().t10;
        assert!((d1 + prod * std::f64::consts::PI).norm() < 1e-12);
    }

    #[test]
    fn parity_laws() {
        let l = lat(C64::new(0.1, 0.9));
        let z = C64::new(0.27, 0.13);
        for ch in ThetaChar::ALL {
            let a = l.theta(ch, z).unwrap();
            let b = l.theta(ch, -z).unwrap();
            let res = if ch.is_odd() { a + b } else { a - b };
            assert!(res.norm() < 1e-12 * a.norm().max(1.0), "{ch:?}");
        }
    }

    #[test]
    fn odd_char_even_derivative_vanishes() {
        let l = lat(C64::new(0.0, 1.0));
        let v = l.theta_deriv(ThetaChar::OneOne, C64::new(0.0, 0.0), 2).unwrap();
        assert!(v.norm() < 1e-12);
        let w = l.theta_deriv(ThetaChar::ZeroZero, C64::new(0.0, 0.0), 1).unwrap();
        assert!(w.norm() < 1e-12);
    }

    #[test]
    fn first_derivative_matches_central_difference() {
        let l = lat(C64::new(0.0, 0.8));
        let z = C64::new(0.2, 0.0);
        let h = 1e-4;
        let fd = (l.theta(ThetaChar::OneOne, z + h).unwrap()
            - l.theta(ThetaChar::OneOne, z - h).unwrap())
            / (2.0 * h);
        let an = l.theta_deriv(ThetaChar::OneOne, z, 1).unwrap();
        assert!((fd - an).norm() < 1e-7 * an.norm().max(1.0));
        // frozen reference from the 30-digit series
        assert!((an - C64::new(-2.732213375325674, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quasi_periodicity_with_explicit_factor() {
        let tau = C64::new(0.2, 1.1);
        let l = lat(tau);
        let z = C64::new(0.31, 0.22);
        let pii = C64::new(0.0, std::f64::consts::PI);
        let n = (-pii * tau - 2.0 * pii * z).exp();
        // z -> z+1 signs: 00:+, 01:+, 10:-, 11:-
        // z -> z+tau factors: 00:+n, 01:-n, 10:+n, 11:-n
        let plus_one = [1.0, 1.0, -1.0, -1.0];
        let plus_tau = [1.0, -1.0, 1.0, -1.0];
        for (k, ch) in ThetaChar::ALL.into_iter().enumerate() {
            let base = l.theta(ch, z).unwrap();
            let s1 = l.theta(ch, z + 1.0).unwrap();
            assert!((s1 - base * plus_one[k]).norm() < 1e-12 * base.norm(), "{ch:?} z+1");
            let st = l.theta(ch, z + tau).unwrap();
            assert!(
                (st - base * n * plus_tau[k]).norm() < 1e-11 * (base * n).norm(),
                "{ch:?} z+tau"
            );
        }
    }

    #[test]
    fn reduction_handles_large_shifts() {
        let tau = C64::new(0.2, 1.1);
        let l = lat(tau);
        let z0 = C64::new(0.31, 0.22);
        let zbig = z0 + 4.0 + tau * 6.0;
        let got = l.theta(ThetaChar::OneZero, zbig).unwrap();
        // frozen from the 30-digit series
        let want = C64::new(-3.212649461472756828527e57, 1.054985144222372782777e57);
        assert!((got - want).norm() < 1e-12 * want.norm());
    }

    #[test]
    fn overflow_guard_trips() {
        let tau = C64::new(0.0, 0.2);
        let z = C64::new(0.0, 0.2 * 51.0);
        let e = theta_raw(ThetaChar::ZeroZero, z, tau, 1e-15);
        assert!(matches!(e, Err(crate::Error::Overflow(_))));
    }

    #[test]
    fn flat_lattice_rejected() {
        let e = LatticeParams::new(C64::new(0.3, 0.01));
        assert!(matches!(e, Err(crate::Error::NonConvergent(_))));
    }

    #[test]
    fn cached_constants_reproduce_series() {
        let l = lat(C64::new(0.15, 0.85));
        let zero = C64::new(0.0, 0.0);
        assert!((l.consts().t00 - l.theta(ThetaChar::ZeroZero, zero).unwrap()).norm() < 1e-15);
        let d = theta_raw_derivs(ThetaChar::OneOne, zero, l.tau(), 3, l.trunc_tol()).unwrap();
        assert!((l.consts().t11_d1 - d[1]).norm() < 1e-15 * d[1].norm());
        assert!((l.consts().t11_d3 - d[3]).norm() < 1e-15 * d[3].norm());
    }

    #[test]
    fn lattice_distance_finds_nearest_point() {
        let tau = C64::new(0.4, 0.9);
        let z = tau * 3.0 + C64::new(2.0, 0.0) + C64::new(1e-4, 0.0);
        assert!((lattice_distance(z, tau) - 1e-4).abs() < 1e-12);
    }
}
