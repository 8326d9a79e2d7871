//! Dense row-major complex matrix and tensor-product helpers.

use crate::error::{Error, Result};
use crate::real::Real;
use num_complex::Complex;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

/// Dense complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix<R: Real> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<R>>,
}

impl<R: Real> CMatrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        CMatrix {
            rows,
            cols,
            data: vec![Complex::new(R::zero(), R::zero()); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex::new(R::one(), R::zero());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<R>) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds from nested row slices; all rows must have equal length.
    pub fn from_rows(rows: &[Vec<Complex<R>>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        CMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|row| row.iter().copied()).collect(),
        }
    }

    pub fn diagonal(entries: &[Complex<R>]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Column vector from a slice.
    pub fn col_vector(v: &[Complex<R>]) -> Self {
        CMatrix {
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Complex<R>] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex<R>] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex<R>> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn diagonal_entries(&self) -> Vec<Complex<R>> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex<R> {
        self.diagonal_entries()
            .into_iter()
            .fold(Complex::new(R::zero(), R::zero()), |a, b| a + b)
    }

    pub fn scale(&self, c: Complex<R>) -> Self {
        let mut out = self.clone();
        for e in out.data.iter_mut() {
            *e = *e * c;
        }
        out
    }

    pub fn scale_re(&self, c: R) -> Self {
        self.scale(Complex::new(c, R::zero()))
    }

    pub fn frobenius_norm(&self) -> R {
        self.data
            .iter()
            .fold(R::zero(), |acc, e| acc + e.norm_sqr())
            .sqrt()
    }

    pub fn max_abs(&self) -> R {
        self.data.iter().fold(R::zero(), |acc, e| acc.max(e.norm()))
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[Complex<R>]) -> Vec<Complex<R>> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.iter())
                    .fold(Complex::new(R::zero(), R::zero()), |acc, (&a, &b)| {
                        acc + a * b
                    })
            })
            .collect()
    }

    /// Checked matrix product.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == R::zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }
}

impl<R: Real> Index<(usize, usize)> for CMatrix<R> {
    type Output = Complex<R>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Complex<R> {
        &self.data[i * self.cols + j]
    }
}

impl<R: Real> IndexMut<(usize, usize)> for CMatrix<R> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<R> {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: Real> Add for &CMatrix<R> {
    type Output = CMatrix<R>;
    fn add(self, rhs: Self) -> CMatrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = *a + *b;
        }
        out
    }
}

impl<R: Real> Sub for &CMatrix<R> {
    type Output = CMatrix<R>;
    fn sub(self, rhs: Self) -> CMatrix<R> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(rhs.data.iter()) {
            *a = *a - *b;
        }
        out
    }
}

impl<R: Real> Neg for &CMatrix<R> {
    type Output = CMatrix<R>;
    fn neg(self) -> CMatrix<R> {
        self.scale(Complex::new(-R::one(), R::zero()))
    }
}

impl<R: Real> Mul for &CMatrix<R> {
    type Output = CMatrix<R>;
    fn mul(self, rhs: Self) -> CMatrix<R> {
        self.matmul(rhs).expect("matrix product dimension mismatch")
    }
}

/// Kronecker product under the normative flattening.
pub fn kron<R: Real>(a: &CMatrix<R>, b: &CMatrix<R>) -> CMatrix<R> {
    let (p, q) = (a.rows(), a.cols());
    let (r, s) = (b.rows(), b.cols());
    let mut out = CMatrix::zeros(p * r, q * s);
    for i in 0..p {
        for j in 0..q {
            let aij = a[(i, j)];
            if aij.norm_sqr() == R::zero() {
                continue;
            }
            for k in 0..r {
                for l in 0..s {
                    out[(i * r + k, j * s + l)] = aij * b[(k, l)];
                }
            }
        }
    }
    out
}

/// AB - BA.
pub fn commutator<R: Real>(a: &CMatrix<R>, b: &CMatrix<R>) -> Result<CMatrix<R>> {
    Ok(&a.matmul(b)? - &b.matmul(a)?)
}

/// AB + BA.
pub fn anticommutator<R: Real>(a: &CMatrix<R>, b: &CMatrix<R>) -> Result<CMatrix<R>> {
    Ok(&a.matmul(b)? + &b.matmul(a)?)
}

/// Permutation matrix P[(i,k),(j,l)] = delta_il delta_kj on C^N tensor C^N.
pub fn permutation_matrix<R: Real>(n: usize) -> CMatrix<R> {
    let mut p = CMatrix::zeros(n * n, n * n);
    for i in 0..n {
        for k in 0..n {
            p[(i * n + k, k * n + i)] = Complex::new(R::one(), R::zero());
        }
    }
    p
}

/// Embeds an N^2 x N^2 two-site operator into the three-site space N^3 x N^3,
/// acting on the given pair of slots (0-based, strictly increasing order not
/// required).
pub fn embed_pair<R: Real>(op: &CMatrix<R>, slots: (usize, usize), n: usize) -> CMatrix<R> {
    assert_eq!(op.rows(), n * n);
    assert!(slots.0 < 3 && slots.1 < 3 && slots.0 != slots.1);
    let spare = 3 - slots.0 - slots.1;
    let mut out = CMatrix::zeros(n * n * n, n * n * n);
    let pos = |idx: [usize; 3]| idx[0] * n * n + idx[1] * n + idx[2];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let v = op[(i * n + k, j * n + l)];
                    if v.norm_sqr() == R::zero() {
                        continue;
                    }
                    for m in 0..n {
                        let mut ridx = [0usize; 3];
                        let mut cidx = [0usize; 3];
                        ridx[slots.0] = i;
                        ridx[slots.1] = k;
                        ridx[spare] = m;
                        cidx[slots.0] = j;
                        cidx[slots.1] = l;
                        cidx[spare] = m;
                        out[(pos(ridx), pos(cidx))] = out[(pos(ridx), pos(cidx))] + v;
                    }
                }
            }
        }
    }
    out
}
