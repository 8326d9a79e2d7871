//! Zero finding on fundamental parallelograms, certified by the argument
//! principle over the boundary.
//!
//! Functions passed here must be holomorphic on the closed cell (callers
//! deflate known poles first). The boundary offset is re-randomized when a
//! zero sits too close to an edge.

use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;

/// Fundamental parallelogram `origin + a w1 + b w2`, `a, b in [0,1)`.
#[derive(Debug, Clone, Copy)]
pub struct TorusDomain<R: Real> {
    pub omega1: Complex<R>,
    pub omega2: Complex<R>,
    pub origin: Complex<R>,
}

impl<R: Real> TorusDomain<R> {
    pub fn new(omega1: Complex<R>, omega2: Complex<R>, origin: Complex<R>) -> Result<Self> {
        let ratio = omega2 / omega1;
        if !(ratio.im.abs() > R::of(1e-6)) {
            return Err(Error::DimensionMismatch(
                "torus periods are real-dependent".into(),
            ));
        }
        Ok(TorusDomain {
            omega1,
            omega2,
            origin,
        })
    }

    /// Lattice coordinates (a, b) of z: z = origin + a w1 + b w2.
    pub fn coords(&self, z: Complex<R>) -> (R, R) {
        let d = z - self.origin;
        let det = self.omega1.re * self.omega2.im - self.omega1.im * self.omega2.re;
        let a = (d.re * self.omega2.im - d.im * self.omega2.re) / det;
        let b = (self.omega1.re * d.im - self.omega1.im * d.re) / det;
        (a, b)
    }

    /// Reduces z into the cell (coordinates wrapped to [0,1)).
    pub fn reduce(&self, z: Complex<R>) -> Complex<R> {
        let (a, b) = self.coords(z);
        let fr = |x: R| x - x.floor();
        self.origin + self.omega1.scale(fr(a)) + self.omega2.scale(fr(b))
    }

    /// True if z lies strictly inside (margin in lattice coordinates).
    pub fn contains(&self, z: Complex<R>, margin: R) -> bool {
        let (a, b) = self.coords(z);
        a > margin && a < R::one() - margin && b > margin && b < R::one() - margin
    }

    fn corner(&self, a: R, b: R) -> Complex<R> {
        self.origin + self.omega1.scale(a) + self.omega2.scale(b)
    }

    fn diameter(&self) -> R {
        self.omega1.norm() + self.omega2.norm()
    }
}

/// Continuous log difference accumulated along one boundary edge, with
/// adaptive bisection so each panel turns less than ~1 radian.
/// Returns (sum of d log f, sum of midpoint-weighted d log f).
fn edge_log_sum<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    z1: Complex<R>,
    z2: Complex<R>,
    f1: Complex<R>,
    f2: Complex<R>,
    depth: usize,
    floor: R,
) -> Result<(Complex<R>, Complex<R>)> {
    if !f1.norm().is_finite() || f1.norm() < floor {
        return Err(Error::BoundaryTooClose { attempts: 0 });
    }
    let ratio = f2 / f1;
    let dphase = ratio.im.atan2(ratio.re);
    if dphase.abs() < R::of(0.8) && ratio.norm().ln().abs() < R::of(1.0) {
        let dlog = Complex::new(ratio.norm().ln(), dphase);
        let mid = (z1 + z2).scale(R::of(0.5));
        return Ok((dlog, dlog * mid));
    }
    if depth >= 48 {
        return Err(Error::BoundaryTooClose { attempts: 0 });
    }
    let zm = (z1 + z2).scale(R::of(0.5));
    let fm = f(zm);
    let (s1, m1) = edge_log_sum(f, z1, zm, f1, fm, depth + 1, floor)?;
    let (s2, m2) = edge_log_sum(f, zm, z2, fm, f2, depth + 1, floor)?;
    Ok((s1 + s2, m1 + m2))
}

/// Winding number and first moment (sum over zeros) from the boundary.
fn boundary_integrals<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    d: &TorusDomain<R>,
) -> Result<(i64, Complex<R>)> {
    let corners = [
        d.corner(R::zero(), R::zero()),
        d.corner(R::one(), R::zero()),
        d.corner(R::one(), R::one()),
        d.corner(R::zero(), R::one()),
    ];
    // coarse pre-sampling keeps the recursion shallow
    let pre = 24usize;
    let mut total = Complex::new(R::zero(), R::zero());
    let mut moment = Complex::new(R::zero(), R::zero());
    let mut maxf = R::zero();
    let mut samples: Vec<(Complex<R>, Complex<R>)> = Vec::with_capacity(4 * pre + 1);
    for e in 0..4 {
        let a = corners[e];
        let b = corners[(e + 1) % 4];
        for k in 0..pre {
            let t = R::of(k as f64) / R::of(pre as f64);
            let z = a + (b - a).scale(t);
            let v = f(z);
            maxf = maxf.max(v.norm());
            samples.push((z, v));
        }
    }
    samples.push(samples[0]);
    let floor = maxf * R::of(1e-13);
    for w in samples.windows(2) {
        let (z1, f1) = w[0];
        let (z2, f2) = w[1];
        let (s, m) = edge_log_sum(f, z1, z2, f1, f2, 0, floor)?;
        total = total + s;
        moment = moment + m;
    }
    let two_pi = R::of(std::f64::consts::TAU);
    let wind = total.im / two_pi;
    let wind_round = wind.round();
    if (wind - wind_round).abs() > R::of(0.25) || total.re.abs() > R::of(1e-6) {
        return Err(Error::CountMismatch {
            expected: wind_round.to_f64().unwrap_or(f64::NAN) as i64,
            found: usize::MAX,
        });
    }
    // first moment: (1/2 pi i) contour integral of z f'/f dz ~ sum z_mid dlog f
    let msum = moment / Complex::new(R::zero(), two_pi);
    Ok((wind_round.to_f64().unwrap_or(0.0) as i64, msum))
}

fn newton_polish<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    mut z: Complex<R>,
    scale: R,
) -> Option<Complex<R>> {
    let h = Complex::new(scale * R::of(1e-6), R::zero());
    for _ in 0..60 {
        let df = (f(z + h) - f(z - h)) / h.scale(R::of(2.0));
        if df.norm() == R::zero() || !df.norm().is_finite() {
            return None;
        }
        let step = f(z) / df;
        z = z - step;
        if !z.re.is_finite() || !z.im.is_finite() {
            return None;
        }
        if step.norm() < scale * R::of(1e-14) {
            return Some(z);
        }
    }
    None
}

fn search_cell<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    d: &TorusDomain<R>,
    depth: usize,
    out: &mut Vec<Complex<R>>,
) -> Result<()> {
    let (count, _) = boundary_integrals(f, d)?;
    if count < 0 {
        return Err(Error::CountMismatch {
            expected: count,
            found: 0,
        });
    }
    if count == 0 {
        return Ok(());
    }
    let scale = d.diameter();
    if count <= 4 || depth >= 12 {
        let mut grid = 8 + 4 * count as usize;
        for _attempt in 0..3 {
            let mut found: Vec<Complex<R>> = Vec::new();
            let mut seeds: Vec<(R, Complex<R>)> = Vec::new();
            for i in 0..grid {
                for j in 0..grid {
                    let a = (R::of(i as f64) + R::of(0.5)) / R::of(grid as f64);
                    let b = (R::of(j as f64) + R::of(0.5)) / R::of(grid as f64);
                    let z = d.corner(a, b);
                    seeds.push((f(z).norm(), z));
                }
            }
            seeds.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(std::cmp::Ordering::Equal));
            let want = (3 * count as usize + 4).min(seeds.len());
            for &(_, seed) in seeds.iter().take(want) {
                if let Some(r) = newton_polish(f, seed, scale) {
                    let r = d.reduce(r);
                    if !found
                        .iter()
                        .any(|&p| (p - r).norm() < scale * R::of(1e-7))
                    {
                        found.push(r);
                    }
                }
                if found.len() == count as usize {
                    break;
                }
            }
            if found.len() == count as usize {
                out.extend(found);
                return Ok(());
            }
            grid *= 2;
        }
        if depth >= 12 {
            return Err(Error::CountMismatch {
                expected: count,
                found: out.len(),
            });
        }
    }
    // split into 4 subcells
    let h1 = d.omega1.scale(R::of(0.5));
    let h2 = d.omega2.scale(R::of(0.5));
    let mut sub_total = 0usize;
    for (da, db) in [
        (R::zero(), R::zero()),
        (R::of(0.5), R::zero()),
        (R::zero(), R::of(0.5)),
        (R::of(0.5), R::of(0.5)),
    ] {
        let sub = TorusDomain {
            omega1: h1,
            omega2: h2,
            origin: d.corner(da, db),
        };
        let before = out.len();
        search_cell(f, &sub, depth + 1, out)?;
        sub_total += out.len() - before;
    }
    if sub_total != count as usize {
        return Err(Error::CountMismatch {
            expected: count,
            found: sub_total,
        });
    }
    Ok(())
}

/// All zeros of `f` in the cell, certified by the argument principle.
///
/// `f` must be holomorphic on the closed cell. When `expected` is given,
/// a mismatch with the certified count is an error.
pub fn torus_roots<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    domain: &TorusDomain<R>,
    expected: Option<usize>,
) -> Result<Vec<Complex<R>>> {
    let boundary_margin = R::of(1e-6);
    let mut last_err = Error::BoundaryTooClose { attempts: 3 };
    for attempt in 0..3u64 {
        // deterministic pseudo-random offset, zero on the first attempt
        let (da, db) = if attempt == 0 {
            (R::zero(), R::zero())
        } else {
            let x = ((attempt.wrapping_mul(2654435761) % 1000) as f64) / 1000.0;
            let y = ((attempt.wrapping_mul(40503) % 1000) as f64) / 1000.0;
            (R::of(0.07 + 0.11 * x), R::of(0.05 + 0.13 * y))
        };
        let shifted = TorusDomain {
            omega1: domain.omega1,
            omega2: domain.omega2,
            origin: domain.origin - domain.omega1.scale(da) - domain.omega2.scale(db),
        };
        let mut roots = Vec::new();
        match search_cell(f, &shifted, 0, &mut roots) {
            Ok(()) => {
                let ok_margin = roots
                    .iter()
                    .all(|&r| shifted.contains(r, boundary_margin));
                if !ok_margin {
                    last_err = Error::BoundaryTooClose {
                        attempts: attempt as usize + 1,
                    };
                    continue;
                }
                if let Some(exp) = expected {
                    if roots.len() != exp {
                        return Err(Error::CountMismatch {
                            expected: exp as i64,
                            found: roots.len(),
                        });
                    }
                }
                // map into the caller's cell and order deterministically
                let mut reduced: Vec<Complex<R>> =
                    roots.into_iter().map(|r| domain.reduce(r)).collect();
                reduced.sort_by(|a, b| {
                    (a.re, a.im)
                        .partial_cmp(&(b.re, b.im))
                        .unwrap_or(std::cmp::Ordering::Equal)
                });
                return Ok(reduced);
            }
            Err(e) => {
                last_err = e;
            }
        }
    }
    Err(last_err)
}

/// Sum of the zeros of `f` in the cell, from the boundary first-moment
/// integral (no polishing). The value is only defined modulo the lattice
/// when zeros are near the boundary; same holomorphy contract as
/// [`torus_roots`].
pub fn torus_root_sum<R: Real>(
    f: &dyn Fn(Complex<R>) -> Complex<R>,
    domain: &TorusDomain<R>,
) -> Result<Complex<R>> {
    let (_, m) = boundary_integrals(f, domain)?;
    Ok(m)
}
