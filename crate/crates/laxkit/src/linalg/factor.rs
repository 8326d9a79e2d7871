//! LU and Jacobi-SVD factorizations, kernel extraction, and characteristic
//! polynomials for small dense complex matrices.

use super::matrix::CMatrix;
use super::poly::poly_roots;
use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;

/// Relative singularity floor for `inverse` (per matrix norm power n).
const SINGULARITY_FLOOR: f64 = 1e-13;
/// Default relative tolerance for kernel detection.
pub const KERNEL_TOL: f64 = 1e-10;

/// LU decomposition with partial pivoting; returns (lu, perm, sign_swaps).
fn lu_decompose<R: Real>(a: &CMatrix<R>) -> Result<(CMatrix<R>, Vec<usize>, usize)> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "LU of {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut lu = a.clone();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut swaps = 0usize;
    for k in 0..n {
        let mut piv = k;
        let mut best = lu[(k, k)].norm();
        for i in k + 1..n {
            let v = lu[(i, k)].norm();
            if v > best {
                best = v;
                piv = i;
            }
        }
        if piv != k {
            for j in 0..n {
                let tmp = lu[(k, j)];
                lu[(k, j)] = lu[(piv, j)];
                lu[(piv, j)] = tmp;
            }
            perm.swap(k, piv);
            swaps += 1;
        }
        let pivot = lu[(k, k)];
        if pivot.norm() == R::zero() {
            continue; // exactly singular; det handles it
        }
        for i in k + 1..n {
            let f = lu[(i, k)] / pivot;
            lu[(i, k)] = f;
            for j in k + 1..n {
                let v = lu[(k, j)];
                lu[(i, j)] = lu[(i, j)] - f * v;
            }
        }
    }
    Ok((lu, perm, swaps))
}

/// Determinant via LU.
pub fn det<R: Real>(a: &CMatrix<R>) -> Result<Complex<R>> {
    let (lu, _, swaps) = lu_decompose(a)?;
    let mut d = Complex::new(R::one(), R::zero());
    for i in 0..a.rows() {
        d = d * lu[(i, i)];
    }
    if swaps % 2 == 1 {
        d = -d;
    }
    Ok(d)
}

/// Solves A x = b for one right-hand side.
pub fn solve<R: Real>(a: &CMatrix<R>, b: &[Complex<R>]) -> Result<Vec<Complex<R>>> {
    let n = a.rows();
    if b.len() != n {
        return Err(Error::DimensionMismatch("solve rhs length".into()));
    }
    let (lu, perm, _) = lu_decompose(a)?;
    for i in 0..n {
        if lu[(i, i)].norm() == R::zero() {
            return Err(Error::Singular("zero pivot in solve".into()));
        }
    }
    let mut y: Vec<Complex<R>> = (0..n).map(|i| b[perm[i]]).collect();
    for i in 0..n {
        for j in 0..i {
            let f = lu[(i, j)];
            let yj = y[j];
            y[i] = y[i] - f * yj;
        }
    }
    for i in (0..n).rev() {
        for j in i + 1..n {
            let f = lu[(i, j)];
            let yj = y[j];
            y[i] = y[i] - f * yj;
        }
        y[i] = y[i] / lu[(i, i)];
    }
    Ok(y)
}

/// Inverse via LU, guarded by the singularity floor 1e-13 * ||A||^n.
pub fn inverse<R: Real>(a: &CMatrix<R>) -> Result<CMatrix<R>> {
    let n = a.rows();
    let d = det(a)?;
    let norm = a.max_abs().max(R::of(1e-300));
    let floor = R::of(SINGULARITY_FLOOR) * norm.powi(n as i32);
    if d.norm() < floor {
        return Err(Error::Singular(format!(
            "|det| = {} below floor {}",
            d.norm(),
            floor
        )));
    }
    let (lu, perm, _) = lu_decompose(a)?;
    let mut inv = CMatrix::zeros(n, n);
    for col in 0..n {
        let mut y: Vec<Complex<R>> = (0..n)
            .map(|i| {
                if perm[i] == col {
                    Complex::new(R::one(), R::zero())
                } else {
                    Complex::new(R::zero(), R::zero())
                }
            })
            .collect();
        for i in 0..n {
            for j in 0..i {
                let f = lu[(i, j)];
                let yj = y[j];
                y[i] = y[i] - f * yj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let f = lu[(i, j)];
                let yj = y[j];
                y[i] = y[i] - f * yj;
            }
            y[i] = y[i] / lu[(i, i)];
        }
        for i in 0..n {
            inv[(i, col)] = y[i];
        }
    }
    Ok(inv)
}

/// Singular value decomposition A = U diag(s) V^H.
pub struct Svd<R: Real> {
    pub u: CMatrix<R>,
    /// Singular values, descending.
    pub s: Vec<R>,
    pub v: CMatrix<R>,
}

/// One-sided Jacobi SVD. Suitable for the small matrices used here.
pub fn svd<R: Real>(a: &CMatrix<R>) -> Result<Svd<R>> {
    // work on A (m x n) with m >= n by transposing if needed
    if a.rows() < a.cols() {
        let t = svd(&a.conj_transpose())?;
        return Ok(Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        });
    }
    let m = a.rows();
    let n = a.cols();
    let mut w = a.clone(); // becomes U * Sigma
    let mut v = CMatrix::<R>::identity(n);
    let eps = R::of(1e-15);
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let mut app = R::zero();
                let mut aqq = R::zero();
                let mut apq = Complex::new(R::zero(), R::zero());
                for i in 0..m {
                    let cp = w[(i, p)];
                    let cq = w[(i, q)];
                    app = app + cp.norm_sqr();
                    aqq = aqq + cq.norm_sqr();
                    apq = apq + cp.conj() * cq;
                }
                if apq.norm() <= eps * (app * aqq).sqrt() || apq.norm() == R::zero() {
                    continue;
                }
                rotated = true;
                // phase so the off-diagonal becomes real: c = |apq| e^{i phi}
                let phase = apq / Complex::new(apq.norm(), R::zero());
                let tau = (aqq - app) / (R::of(2.0) * apq.norm());
                let t = {
                    let s = if tau >= R::zero() { R::one() } else { -R::one() };
                    s / (tau.abs() + (R::one() + tau * tau).sqrt())
                };
                let c = R::one() / (R::one() + t * t).sqrt();
                let s = c * t;
                // columns (p,q) <- (p,q) * [[c, s*phase],[-s*conj(phase)... ]]
                // derived so that new columns are orthogonal
                let sp = Complex::new(s, R::zero()) * phase;
                for i in 0..m {
                    let cp = w[(i, p)];
                    let cq = w[(i, q)];
                    w[(i, p)] = cp.scale(c) - cq * sp.conj();
                    w[(i, q)] = cq.scale(c) + cp * sp;
                }
                for i in 0..n {
                    let vp = v[(i, p)];
                    let vq = v[(i, q)];
                    v[(i, p)] = vp.scale(c) - vq * sp.conj();
                    v[(i, q)] = vq.scale(c) + vp * sp;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    // column norms are the singular values
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<R> = (0..n)
        .map(|j| {
            (0..m)
                .fold(R::zero(), |acc, i| acc + w[(i, j)].norm_sqr())
                .sqrt()
        })
        .collect();
    order.sort_by(|&x, &y| norms[y].partial_cmp(&norms[x]).unwrap());
    let mut u = CMatrix::<R>::zeros(m, n);
    let mut vv = CMatrix::<R>::zeros(n, n);
    let mut s_out = Vec::with_capacity(n);
    for (newj, &oldj) in order.iter().enumerate() {
        let sj = norms[oldj];
        s_out.push(sj);
        for i in 0..m {
            u[(i, newj)] = if sj > R::of(1e-300) {
                w[(i, oldj)].scale(R::one() / sj)
            } else {
                Complex::new(R::zero(), R::zero())
            };
        }
        for i in 0..n {
            vv[(i, newj)] = v[(i, oldj)];
        }
    }
    Ok(Svd { u, s: s_out, v: vv })
}

/// Unit vector spanning the numerical kernel of `a` (rank deficiency 1).
///
/// Phase convention: the component of largest modulus is made real positive.
pub fn kernel_vector<R: Real>(a: &CMatrix<R>, tol: R) -> Result<Vec<Complex<R>>> {
    let f = svd(a)?;
    let smax = f.s[0].max(R::of(1e-300));
    let n = f.s.len();
    let smin = f.s[n - 1];
    if smin >= tol * smax {
        return Err(Error::NotRankDeficient {
            smin: smin.to_f64().unwrap_or(f64::NAN),
        });
    }
    if n >= 2 && f.s[n - 2] < tol * smax {
        let dim = f.s.iter().filter(|&&s| s < tol * smax).count();
        return Err(Error::KernelDimensionTooLarge { dim });
    }
    let mut v = f.v.column(n - 1);
    let mut kmax = 0;
    let mut best = R::zero();
    for (k, e) in v.iter().enumerate() {
        if e.norm() > best {
            best = e.norm();
            kmax = k;
        }
    }
    let phase = v[kmax] / Complex::new(v[kmax].norm(), R::zero());
    for e in v.iter_mut() {
        *e = *e / phase;
    }
    Ok(v)
}

/// Characteristic polynomial coefficients, ascending in k:
/// det(A - k I) has coefficients c[0] + c[1] k + ... + c[n] k^n
/// returned via Faddeev-LeVerrier on p(k) = det(k I - A), adjusted by sign.
pub fn char_poly<R: Real>(a: &CMatrix<R>) -> Result<Vec<Complex<R>>> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("char_poly of non-square".into()));
    }
    let n = a.rows();
    // Faddeev-LeVerrier for p(k) = det(kI - A) = k^n + c_{n-1} k^{n-1} + ... + c_0
    let mut coeffs = vec![Complex::new(R::zero(), R::zero()); n + 1];
    coeffs[n] = Complex::new(R::one(), R::zero());
    let mut m = CMatrix::<R>::identity(n);
    for k in 1..=n {
        let am = a.matmul(&m)?;
        let c = -am.trace().scale(R::one() / R::of(k as f64));
        coeffs[n - k] = c;
        m = am;
        for i in 0..n {
            m[(i, i)] = m[(i, i)] + c;
        }
    }
    Ok(coeffs)
}

/// Eigenvalues of a small square matrix through the characteristic polynomial.
pub fn eigenvalues<R: Real>(a: &CMatrix<R>) -> Result<Vec<Complex<R>>> {
    poly_roots(&char_poly(a)?)
}
