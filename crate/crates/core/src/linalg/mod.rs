//! Dense small-matrix kernel: Householder-QR least squares plus the tail
//! probabilities (Student t, F, chi-square) used by the statistical modules.
//!
//! QR rather than normal equations: the regressions in this crate mix
//! regressors on the order of 1e12 (GDP levels) with a time trend 1..T, so
//! forming X'X would square an already unfriendly condition number.

pub mod special;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::math;

/// Row-major dense matrix of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix from equal-length column vectors.
    pub fn from_columns(columns: &[Vec<f64>]) -> Self {
        assert!(!columns.is_empty(), "matrix needs at least one column");
        let rows = columns[0].len();
        for c in columns {
            assert_eq!(c.len(), rows, "ragged columns");
        }
        let cols = columns.len();
        let mut data = vec![0.0; rows * cols];
        for (j, col) in columns.iter().enumerate() {
            for (i, &v) in col.iter().enumerate() {
                data[i * cols + j] = v;
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<f64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = 0.0;
                for c in 0..self.cols {
                    acc += self.get(r, c) * v[c];
                }
                acc
            })
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        math::sqrt(self.data.iter().map(|x| x * x).sum())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum LinalgError {
    /// Design matrix is rank deficient; `column` is the offending 0-based column.
    Singular { column: usize },
    /// Fewer rows than columns.
    TooFewRows { rows: usize, cols: usize },
    /// `y` length does not match the number of rows.
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for LinalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinalgError::Singular { column } => {
                write!(f, "singular design matrix (column {})", column)
            }
            LinalgError::TooFewRows { rows, cols } => {
                write!(f, "{} observations for {} parameters", rows, cols)
            }
            LinalgError::LengthMismatch { expected, got } => {
                write!(f, "expected {} observations, got {}", expected, got)
            }
        }
    }
}

impl core::error::Error for LinalgError {}

/// Least-squares solution of `min ||y - X b||` together with the pieces the
/// regression modules need for standard errors.
#[derive(Debug, Clone)]
pub struct Lstsq {
    pub beta: Vec<f64>,
    pub fitted: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Diagonal of `(X'X)^-1`, from the inverse of the R factor.
    pub xtx_inv_diag: Vec<f64>,
}

/// Householder-QR least squares.
///
/// A pivot `|r_jj| <= 1e-12 * ||X||_F` is treated as rank deficiency and
/// reported with the offending column index.
pub fn lstsq(x: &Matrix, y: &[f64]) -> Result<Lstsq, LinalgError> {
    let (t, k) = (x.rows(), x.cols());
    if y.len() != t {
        return Err(LinalgError::LengthMismatch {
            expected: t,
            got: y.len(),
        });
    }
    if t < k {
        return Err(LinalgError::TooFewRows { rows: t, cols: k });
    }

    // Rank tolerance is per column: a pivot below 1e-12 of the column's own
    // norm marks that column as linearly dependent on its predecessors.
    let col_tols: Vec<f64> = (0..k)
        .map(|j| {
            let mut n = 0.0;
            for i in 0..t {
                let v = x.get(i, j);
                n += v * v;
            }
            1e-12 * math::sqrt(n)
        })
        .collect();
    let mut r = x.clone();
    let mut qty: Vec<f64> = y.to_vec();

    // Householder triangularisation, reflectors applied to qty as we go.
    for j in 0..k {
        let tol = col_tols[j];
        let mut norm = 0.0;
        for i in j..t {
            let v = r.get(i, j);
            norm += v * v;
        }
        let norm = math::sqrt(norm);
        if norm <= tol || norm == 0.0 {
            return Err(LinalgError::Singular { column: j });
        }
        let alpha = if r.get(j, j) >= 0.0 { -norm } else { norm };
        // v = x_j - alpha * e_j, normalised so v[j] = 1
        let vjj = r.get(j, j) - alpha;
        if vjj == 0.0 {
            // Column already reduced; just set the diagonal.
            r.set(j, j, alpha);
            continue;
        }
        let mut v = vec![0.0; t - j];
        v[0] = 1.0;
        for i in (j + 1)..t {
            v[i - j] = r.get(i, j) / vjj;
        }
        let vtv: f64 = v.iter().map(|a| a * a).sum();
        let beta_h = 2.0 / vtv;
        // Apply H = I - beta v v' to the remaining columns of R.
        for c in j..k {
            let mut dot = 0.0;
            for i in j..t {
                dot += v[i - j] * r.get(i, c);
            }
            let s = beta_h * dot;
            for i in j..t {
                let val = r.get(i, c) - s * v[i - j];
                r.set(i, c, val);
            }
        }
        // And to qty.
        let mut dot = 0.0;
        for i in j..t {
            dot += v[i - j] * qty[i];
        }
        let s = beta_h * dot;
        for i in j..t {
            qty[i] -= s * v[i - j];
        }
        if math::abs(r.get(j, j)) <= col_tols[j] {
            return Err(LinalgError::Singular { column: j });
        }
    }

    // Back substitution on the k x k triangle.
    let mut beta = vec![0.0; k];
    for j in (0..k).rev() {
        let mut acc = qty[j];
        for c in (j + 1)..k {
            acc -= r.get(j, c) * beta[c];
        }
        beta[j] = acc / r.get(j, j);
    }

    let fitted = x.mul_vec(&beta);
    let residuals: Vec<f64> = y.iter().zip(&fitted).map(|(a, b)| a - b).collect();

    // diag((X'X)^-1) = row sums of squares of R^-1.
    let mut rinv = vec![0.0; k * k]; // upper triangular, row-major
    for j in (0..k).rev() {
        rinv[j * k + j] = 1.0 / r.get(j, j);
        for c in (j + 1)..k {
            let mut acc = 0.0;
            for m in (j + 1)..=c {
                acc += r.get(j, m) * rinv[m * k + c];
            }
            rinv[j * k + c] = -acc / r.get(j, j);
        }
    }
    let xtx_inv_diag: Vec<f64> = (0..k)
        .map(|j| (j..k).map(|c| rinv[j * k + c] * rinv[j * k + c]).sum())
        .collect();

    Ok(Lstsq {
        beta,
        fitted,
        residuals,
        xtx_inv_diag,
    })
}

/// Human-readable name for a design column, used in singularity errors.
pub fn column_label(names: &[String], column: usize) -> String {
    names
        .get(column)
        .cloned()
        .unwrap_or_else(|| alloc::format!("column {}", column))
}
