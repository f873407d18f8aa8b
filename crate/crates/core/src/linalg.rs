// Copyright 2026 the infillgp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Dense symmetric positive-definite linear algebra: Cholesky factorization,
//! triangular solves, log-determinant and quadratic forms.
//!
//! No pivoting and no automatic regularization: a non-positive pivot is
//! reported as [`LinalgError::NotPositiveDefinite`] and the caller decides.
//! Rows are stored contiguously, so the inner loops of the factorization are
//! prefix dot products over two rows.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not positive definite: pivot {pivot:.6e} at index {index}")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Dense square matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Matrix {
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[&[f64]]) -> Matrix {
        let n = rows.len();
        let mut m = Matrix::zeros(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n);
            m.data[i * n..(i + 1) * n].copy_from_slice(r);
        }
        m
    }

    /// Builds a symmetric matrix by evaluating `f(i, j)` on the lower
    /// triangle only and mirroring, so symmetry holds to the bit.
    pub fn symmetric_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Matrix {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            for j in 0..=i {
                let v = f(i, j);
                m.data[i * n + j] = v;
                m.data[j * n + i] = v;
            }
        }
        m
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    /// Adds `eps` to every diagonal entry (explicit nugget; nothing in this
    /// crate applies one implicitly).
    pub fn add_diagonal(&mut self, eps: f64) {
        for i in 0..self.n {
            self.data[i * self.n + i] += eps;
        }
    }

    /// `A x` for a vector `x`.
    pub fn mat_vec(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n);
        self.data
            .chunks_exact(self.n)
            .map(|row| dot(row, x))
            .collect()
    }
}

#[inline]
fn dot(a: &[f64], b: &[f64]) -> f64 {
    // simple unrolled dot; the compiler vectorizes this form well
    let mut s0 = 0.0;
    let mut s1 = 0.0;
    let mut s2 = 0.0;
    let mut s3 = 0.0;
    let chunks = a.len() / 4;
    for k in 0..chunks {
        let i = 4 * k;
        s0 += a[i] * b[i];
        s1 += a[i + 1] * b[i + 1];
        s2 += a[i + 2] * b[i + 2];
        s3 += a[i + 3] * b[i + 3];
    }
    let mut s = (s0 + s1) + (s2 + s3);
    for i in 4 * chunks..a.len() {
        s += a[i] * b[i];
    }
    s
}

/// Lower-triangular Cholesky factor `L` with `A = L L'`.
#[derive(Debug, Clone)]
pub struct CholeskyFactor {
    n: usize,
    l: Vec<f64>, // row-major, entries above the diagonal are zero
}

/// Factorizes a symmetric positive definite matrix. Fails with the offending
/// pivot index on the first non-positive pivot.
pub fn cholesky(a: &Matrix) -> Result<CholeskyFactor, LinalgError> {
    let n = a.n;
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        let (head, tail) = l.split_at_mut(i * n);
        let row_i = &mut tail[..n];
        for j in 0..i {
            let row_j = &head[j * n..j * n + j + 1];
            let s = a.at(i, j) - dot(&row_i[..j], &row_j[..j]);
            row_i[j] = s / row_j[j];
        }
        let s = a.at(i, i) - dot(&row_i[..i], &row_i[..i]);
        if s <= 0.0 || !s.is_finite() {
            return Err(LinalgError::NotPositiveDefinite { index: i, pivot: s });
        }
        row_i[i] = s.sqrt();
    }
    Ok(CholeskyFactor { n, l })
}

impl CholeskyFactor {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.l[i * self.n + j]
    }

    /// Solves `L y = b` (forward substitution).
    pub fn solve_lower(&self, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
        self.check_len(b.len())?;
        let n = self.n;
        let mut y = b.to_vec();
        for i in 0..n {
            let row = &self.l[i * n..i * n + i];
            let s = dot(row, &y[..i]);
            y[i] = (y[i] - s) / self.l[i * n + i];
        }
        Ok(y)
    }

    /// Solves `A x = b` with `A = L L'` (forward then back substitution).
    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>, LinalgError> {
        let n = self.n;
        let mut x = self.solve_lower(b)?;
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.l[j * n + i] * x[j];
            }
            x[i] = s / self.l[i * n + i];
        }
        Ok(x)
    }

    /// `log |A| = 2 sum_i log L_ii`.
    pub fn log_det(&self) -> f64 {
        let n = self.n;
        (0..n).map(|i| self.l[i * n + i].ln()).sum::<f64>() * 2.0
    }

    /// `z' A^{-1} z` computed as `||L^{-1} z||^2`; nonnegative by
    /// construction.
    pub fn quad_form(&self, z: &[f64]) -> Result<f64, LinalgError> {
        let y = self.solve_lower(z)?;
        Ok(y.iter().map(|v| v * v).sum())
    }

    /// `L v` (used by the simulator: `Z = L eta`).
    pub fn lower_times(&self, v: &[f64]) -> Result<Vec<f64>, LinalgError> {
        self.check_len(v.len())?;
        let n = self.n;
        Ok((0..n)
            .map(|i| dot(&self.l[i * n..i * n + i + 1], &v[..i + 1]))
            .collect())
    }

    /// Max elementwise residual of `L L' - A`.
    pub fn reconstruction_residual(&self, a: &Matrix) -> f64 {
        let n = self.n;
        let mut worst = 0.0_f64;
        for i in 0..n {
            for j in 0..=i {
                let v = dot(&self.l[i * n..i * n + j + 1], &self.l[j * n..j * n + j + 1]);
                worst = worst.max((v - a.at(i, j)).abs());
            }
        }
        worst
    }

    fn check_len(&self, got: usize) -> Result<(), LinalgError> {
        if got != self.n {
            return Err(LinalgError::DimensionMismatch {
                expected: self.n,
                got,
            });
        }
        Ok(())
    }
}
