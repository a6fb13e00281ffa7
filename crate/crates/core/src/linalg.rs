//! Minimal dense complex linear algebra.
//!
//! The dimensions in this problem are tiny (antennas and devices in the
//! single digits), so a small row-major matrix type plus a Cholesky solve is
//! all the beamformer construction needs.

use num_complex::Complex;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex::new(T::zero(), T::zero()); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {rows}x{cols} = {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Contiguous row slice.
    pub fn row(&self, r: usize) -> &[Complex<T>] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex<T>] {
        &mut self.data
    }

    /// Conjugate transpose.
    pub fn hermitian_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    /// `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "matmul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                for c in 0..other.cols {
                    out[(r, c)] = out[(r, c)] + a * other[(k, c)];
                }
            }
        }
        Ok(out)
    }

    /// Euclidean norm of column `c`.
    pub fn col_norm(&self, c: usize) -> T {
        let mut s = T::zero();
        for r in 0..self.rows {
            s = s + self[(r, c)].norm_sqr();
        }
        s.sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }
}

impl<T> Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (r, c): (usize, usize)) -> &Complex<T> {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[r * self.cols + c]
    }
}

/// Hermitian inner product `a^H b`.
pub fn hermitian_dot<T: Scalar>(a: &[Complex<T>], b: &[Complex<T>]) -> Complex<T> {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, y) in a.iter().zip(b) {
        acc = acc + x.conj() * *y;
    }
    acc
}

/// Solve `A X = B` for Hermitian positive-definite `A` via Cholesky.
pub fn cholesky_solve<T: Scalar>(a: &ComplexMatrix<T>, b: &ComplexMatrix<T>) -> Result<ComplexMatrix<T>> {
    let n = a.rows();
    if a.cols() != n || b.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "cholesky_solve {}x{} with rhs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }

    // A = L L^H, L lower triangular with real positive diagonal.
    let mut l = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        let mut diag = a[(j, j)].re;
        for k in 0..j {
            diag = diag - l[(j, k)].norm_sqr();
        }
        if !(diag > T::zero()) {
            return Err(Error::NotPositiveDefinite {
                pivot: diag.to_f64().unwrap_or(f64::NAN),
                index: j,
            });
        }
        let d = diag.sqrt();
        l[(j, j)] = Complex::new(d, T::zero());
        for i in (j + 1)..n {
            let mut s = a[(i, j)];
            for k in 0..j {
                s = s - l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / d;
        }
    }

    // Forward substitution L Y = B, then back substitution L^H X = Y.
    let mut x = b.clone();
    for c in 0..b.cols() {
        for i in 0..n {
            let mut s = x[(i, c)];
            for k in 0..i {
                s = s - l[(i, k)] * x[(k, c)];
            }
            x[(i, c)] = s / l[(i, i)].re;
        }
        for i in (0..n).rev() {
            let mut s = x[(i, c)];
            for k in (i + 1)..n {
                s = s - l[(k, i)].conj() * x[(k, c)];
            }
            x[(i, c)] = s / l[(i, i)].re;
        }
    }
    Ok(x)
}

/// Identity matrix scaled by `alpha`.
pub fn scaled_identity<T: Scalar>(n: usize, alpha: T) -> ComplexMatrix<T> {
    let mut m = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        m[(i, i)] = Complex::new(alpha, T::zero());
    }
    m
}
