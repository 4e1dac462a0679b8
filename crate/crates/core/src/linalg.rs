//! Minimal dense-matrix kernel: principal eigenpair via power iteration and
//! the supermatrix limit via repeated powering with a Cesaro fallback.
//!
//! Every matrix handled here is small (a handful of rows) and either a
//! positive reciprocal matrix or a column-stochastic block, so a naive O(n^3)
//! multiply and sum-normalized power iteration are entirely adequate.

use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Default tolerance for [`principal_eigenpair`].
pub const EIGEN_TOL: f64 = 1e-12;
/// Default iteration cap for [`principal_eigenpair`].
pub const EIGEN_MAX_ITER: usize = 10_000;
/// Default tolerance for [`limit_supermatrix`].
pub const LIMIT_TOL: f64 = 1e-10;
/// Default matrix-power budget for [`limit_supermatrix`].
pub const LIMIT_MAX_ITER: usize = 1_000;

/// Dense square matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    order: usize,
    entries: Vec<T>,
}

impl<T: Real> SquareMatrix<T> {
    pub fn new(order: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                got: entries.len(),
            });
        }
        for (k, e) in entries.iter().enumerate() {
            if !e.is_finite() {
                return Err(Error::NonFiniteValue {
                    row: k / order,
                    col: k % order,
                });
            }
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let order = rows.len();
        for row in &rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    got: row.len(),
                });
            }
        }
        Self::new(order, rows.into_iter().flatten().collect())
    }

    pub fn identity(order: usize) -> Self {
        let mut m = Self {
            order,
            entries: vec![T::zero(); order * order],
        };
        for i in 0..order {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn zero(order: usize) -> Self {
        Self {
            order,
            entries: vec![T::zero(); order * order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries[row * self.order + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: T) {
        self.entries[row * self.order + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<T> {
        (0..self.order).map(|row| self.get(row, col)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        (0..self.order)
            .map(|i| self.entries[i * self.order..(i + 1) * self.order].to_vec())
            .collect()
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.order;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == T::zero() {
                    continue;
                }
                for j in 0..n {
                    let cur = out.get(i, j);
                    out.set(i, j, cur + a * other.get(k, j));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).abs())
            .fold(T::zero(), T::max)
    }

    fn add(&self, other: &Self) -> Self {
        Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        }
    }

    fn scale(&self, factor: T) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|e| *e * factor).collect(),
        }
    }
}

/// Dominant eigenvalue and sum-normalized eigenvector of a non-negative
/// matrix with at least one positive entry per row.
///
/// Power iteration with sum normalization at each step, starting from the
/// uniform vector; such matrices have a unique dominant eigenpair and the
/// uniform start is never orthogonal to it. Converged when successive
/// eigenvalue estimates differ by less than `tol`.
pub fn principal_eigenpair<T: Real>(
    m: &SquareMatrix<T>,
    tol: T,
    max_iter: usize,
) -> Result<(T, Vec<T>)> {
    let n = m.order();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    debug_assert!(
        m.entries.iter().all(|e| *e >= T::zero()),
        "power iteration expects non-negative entries"
    );
    let uniform = T::one() / T::from_usize(n).unwrap();
    let mut v = vec![uniform; n];
    let mut lambda_prev = T::zero();
    for _ in 0..max_iter {
        let image = m.mul_vec(&v);
        // v sums to 1, so the image sum is the current eigenvalue estimate.
        let lambda: T = image.iter().copied().sum();
        if lambda <= T::zero() || !lambda.is_finite() {
            return Err(Error::NoConvergence(max_iter));
        }
        v = image.into_iter().map(|x| x / lambda).collect();
        if (lambda - lambda_prev).abs() < tol {
            return Ok((lambda, v));
        }
        lambda_prev = lambda;
    }
    Err(Error::NoConvergence(max_iter))
}

/// [`principal_eigenpair`] with the default tolerance and iteration cap.
pub fn principal_eigenpair_default<T: Real>(m: &SquareMatrix<T>) -> Result<(T, Vec<T>)> {
    principal_eigenpair(m, real(EIGEN_TOL), EIGEN_MAX_ITER)
}

/// Limit of the powers of a column-stochastic matrix (all-zero columns
/// permitted; they propagate as zero).
///
/// Repeated squaring reaches the even-power limit quickly; if one further
/// multiplication leaves the matrix unchanged that limit is the answer,
/// otherwise the powers cycle and the Cesaro average over one detected
/// period is returned.
pub fn limit_supermatrix<T: Real>(
    w: &SquareMatrix<T>,
    tol: T,
    max_iter: usize,
) -> Result<SquareMatrix<T>> {
    let n = w.order();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let column_tol: T = real(1e-9);
    for j in 0..n {
        let sum: T = w.column(j).into_iter().sum();
        if sum != T::zero() && (sum - T::one()).abs() > column_tol {
            return Err(Error::NotColumnStochastic(j));
        }
    }

    // Squaring drives the exponent past any transient; 64 doublings give
    // W^(2^64), astronomically past convergence for desk-scale matrices.
    let mut a = w.clone();
    for _ in 0..64.min(max_iter) {
        let squared = a.multiply(&a);
        let diff = squared.max_abs_diff(&a);
        a = squared;
        if diff < tol {
            break;
        }
    }

    let advanced = a.multiply(w);
    if advanced.max_abs_diff(&a) < tol {
        return Ok(a);
    }

    // Periodic case: average the cycle starting from the stabilized power.
    let mut sum = a.clone();
    let mut current = advanced;
    let mut count = 1usize;
    loop {
        if current.max_abs_diff(&a) < tol {
            let period = T::from_usize(count).unwrap();
            return Ok(sum.scale(T::one() / period));
        }
        if count >= max_iter {
            return Err(Error::NoConvergence(max_iter));
        }
        sum = sum.add(&current);
        current = current.multiply(w);
        count += 1;
    }
}

/// [`limit_supermatrix`] with the default tolerance and power budget.
pub fn limit_supermatrix_default<T: Real>(w: &SquareMatrix<T>) -> Result<SquareMatrix<T>> {
    limit_supermatrix(w, real(LIMIT_TOL), LIMIT_MAX_ITER)
}
