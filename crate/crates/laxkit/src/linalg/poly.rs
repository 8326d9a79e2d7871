//! Polynomial root finding: Durand-Kerner simultaneous iteration with a
//! Newton polish pass.

use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;

/// Evaluates a polynomial with ascending coefficients at z.
pub fn eval_poly<R: Real>(coeffs: &[Complex<R>], z: Complex<R>) -> Complex<R> {
    let mut acc = Complex::new(R::zero(), R::zero());
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

/// Evaluates the derivative of a polynomial with ascending coefficients.
pub fn eval_poly_deriv<R: Real>(coeffs: &[Complex<R>], z: Complex<R>) -> Complex<R> {
    let mut acc = Complex::new(R::zero(), R::zero());
    for k in (1..coeffs.len()).rev() {
        acc = acc * z + coeffs[k].scale(R::of(k as f64));
    }
    acc
}

/// All roots of the polynomial `coeffs[0] + coeffs[1] z + ... + coeffs[n] z^n`.
///
/// Roots are sorted lexicographically by (Re, Im). Multiple roots come out
/// as clusters with the usual accuracy loss.
pub fn poly_roots<R: Real>(coeffs: &[Complex<R>]) -> Result<Vec<Complex<R>>> {
    let maxc = coeffs.iter().fold(R::zero(), |a, c| a.max(c.norm()));
    if coeffs.len() < 2 {
        return Ok(Vec::new());
    }
    let lead = coeffs[coeffs.len() - 1];
    if lead.norm() < maxc * R::of(1e-12) || lead.norm() == R::zero() {
        return Err(Error::DegenerateLeadingCoefficient);
    }
    let n = coeffs.len() - 1;
    // monic coefficients
    let monic: Vec<Complex<R>> = coeffs.iter().map(|&c| c / lead).collect();
    if n == 1 {
        return Ok(vec![-monic[0]]);
    }
    // Cauchy-style bound for the initial circle
    let bound = R::one()
        + monic[..n]
            .iter()
            .fold(R::zero(), |a, c| a.max(c.norm()));
    let seed = Complex::new(R::of(0.4), R::of(0.9));
    let mut roots: Vec<Complex<R>> = Vec::with_capacity(n);
    let mut w = Complex::new(R::one(), R::zero());
    for _ in 0..n {
        w = w * seed;
        roots.push(w.scale(bound / seed.norm()));
    }
    let tol = R::of(1e-14);
    for _ in 0..600 {
        let mut max_step = R::zero();
        for k in 0..n {
            let zk = roots[k];
            let mut denom = Complex::new(R::one(), R::zero());
            for j in 0..n {
                if j != k {
                    denom = denom * (zk - roots[j]);
                }
            }
            if denom.norm() == R::zero() {
                // perturb coincident iterates
                roots[k] = zk + Complex::new(R::of(1e-8), R::of(1e-8));
                max_step = R::one();
                continue;
            }
            let step = eval_poly(&monic, zk) / denom;
            roots[k] = zk - step;
            let rel = step.norm() / (R::one() + zk.norm());
            if rel > max_step {
                max_step = rel;
            }
        }
        if max_step < tol {
            break;
        }
    }
    // Newton polish
    for r in roots.iter_mut() {
        for _ in 0..8 {
            let d = eval_poly_deriv(&monic, *r);
            if d.norm() == R::zero() {
                break;
            }
            let step = eval_poly(&monic, *r) / d;
            if step.norm() > R::of(0.5) * (R::one() + r.norm()) {
                break; // polishing would leave the cluster; keep DK value
            }
            *r = *r - step;
            if step.norm() < R::of(1e-15) * (R::one() + r.norm()) {
                break;
            }
        }
    }
    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(roots)
}
