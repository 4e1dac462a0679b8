//! Saaty pairwise-comparison machinery: validation, priority vectors,
//! consistency analysis, and the logarithmic mapping from objective matrix
//! columns onto the 1-9 scale.

use crate::error::{Error, Result};
use crate::linalg::{principal_eigenpair_default, SquareMatrix};
use crate::model::{DecisionProblem, Direction};
use crate::scalar::{lossy, real, Real};

/// Saaty random consistency indices for orders 1..=10.
pub const RANDOM_INDEX: [f64; 10] = [0.0, 0.0, 0.58, 0.90, 1.12, 1.24, 1.32, 1.41, 1.45, 1.49];

/// Threshold below which a consistency ratio is acceptable.
pub const CR_THRESHOLD: f64 = 0.1;

/// Whether an unacceptable consistency ratio is a warning or a hard error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConsistencyPolicy {
    /// Report the ratio, keep going. Rankings from inconsistent judgments
    /// are still well-defined; the decision-maker is told to revise.
    #[default]
    Warn,
    /// Fail with [`Error::InconsistentJudgments`] when CR exceeds 0.1.
    Strict,
}

/// Square positive reciprocal matrix of Saaty-scale judgments with a unit
/// diagonal. Entries may be any value in [1/9, 9], not just the integer
/// scale; the logarithmic mapping produces continuous values.
#[derive(Debug, Clone, PartialEq)]
pub struct PairwiseMatrix<T> {
    order: usize,
    entries: Vec<T>,
    labels: Vec<String>,
}

impl<T: Real> PairwiseMatrix<T> {
    /// Build from the n(n-1)/2 upper-triangle judgments (0-based indices,
    /// `i < j`); the diagonal is set to 1 and the lower triangle filled with
    /// reciprocals.
    pub fn from_upper_triangle(labels: Vec<String>, judgments: &[(usize, usize, T)]) -> Result<Self> {
        let order = labels.len();
        let mut entries = vec![T::zero(); order * order];
        let mut provided = vec![false; order * order];
        for i in 0..order {
            entries[i * order + i] = T::one();
        }
        for &(i, j, value) in judgments {
            if i >= j || j >= order {
                return Err(Error::InvalidComparisonIndex { i, j, order });
            }
            if provided[i * order + j] {
                return Err(Error::DuplicateComparison { i, j });
            }
            check_scale(&value)?;
            provided[i * order + j] = true;
            entries[i * order + j] = value;
            entries[j * order + i] = T::one() / value;
        }
        for i in 0..order {
            for j in (i + 1)..order {
                if !provided[i * order + j] {
                    return Err(Error::MissingComparison { i, j });
                }
            }
        }
        Ok(Self {
            order,
            entries,
            labels,
        })
    }

    /// Build from a full matrix, validating the unit diagonal, reciprocity
    /// within 1e-9, and the Saaty range.
    pub fn from_rows(labels: Vec<String>, rows: Vec<Vec<T>>) -> Result<Self> {
        let order = labels.len();
        if rows.len() != order {
            return Err(Error::DimensionMismatch {
                expected: order,
                got: rows.len(),
            });
        }
        let mut entries = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    got: row.len(),
                });
            }
            entries.extend(row);
        }
        let matrix = Self {
            order,
            entries,
            labels,
        };
        matrix.validate()?;
        Ok(matrix)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        let reciprocity_tol: T = real(1e-9);
        for i in 0..n {
            if self.entry(i, i) != T::one() {
                return Err(Error::DiagonalNotUnit(i));
            }
            for j in (i + 1)..n {
                check_scale(&self.entry(i, j))?;
                check_scale(&self.entry(j, i))?;
                let product = self.entry(i, j) * self.entry(j, i);
                if (product - T::one()).abs() > reciprocity_tol {
                    return Err(Error::ReciprocityViolation { i, j });
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, row: usize, col: usize) -> T {
        self.entries[row * self.order + col]
    }

    pub fn to_square(&self) -> SquareMatrix<T> {
        SquareMatrix::new(self.order, self.entries.clone()).expect("validated entries are finite")
    }
}

fn check_scale<T: Real>(value: &T) -> Result<()> {
    let slack: T = real(1e-9);
    let lo = T::one() / real(9.0) - slack;
    let hi: T = real::<T>(9.0) + slack;
    if !value.is_finite() || *value < lo || *value > hi {
        return Err(Error::ScaleViolation(lossy(value)));
    }
    Ok(())
}

/// Consistency diagnostics of one pairwise matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyReport<T> {
    pub lambda_max: T,
    pub ci: T,
    pub ri: T,
    pub cr: T,
    pub acceptable: bool,
}

impl<T: Real> ConsistencyReport<T> {
    /// Under the strict policy, an unacceptable ratio is an error; `context`
    /// names the offending matrix in the message.
    pub fn enforce(&self, policy: ConsistencyPolicy, context: &str) -> Result<()> {
        if policy == ConsistencyPolicy::Strict && !self.acceptable {
            return Err(Error::InconsistentJudgments {
                context: context.to_string(),
                cr: lossy(&self.cr),
            });
        }
        Ok(())
    }
}

/// Priority vector (sum-normalized principal eigenvector) and the dominant
/// eigenvalue of a pairwise matrix.
pub fn priority_vector<T: Real>(matrix: &PairwiseMatrix<T>) -> Result<(Vec<T>, T)> {
    let (lambda, weights) = principal_eigenpair_default(&matrix.to_square())?;
    Ok((weights, lambda))
}

/// CI = (lambda_max - n) / (n - 1), CR = CI / RI with Saaty's tabulated
/// random indices. Orders 1 and 2 are always consistent, so CR is defined
/// as 0 there.
pub fn consistency<T: Real>(lambda_max: T, order: usize) -> Result<ConsistencyReport<T>> {
    if order == 0 || order > RANDOM_INDEX.len() {
        return Err(Error::OrderOutOfRange(order));
    }
    let ri: T = real(RANDOM_INDEX[order - 1]);
    let ci = if order >= 2 {
        (lambda_max - T::from_usize(order).unwrap()) / T::from_usize(order - 1).unwrap()
    } else {
        T::zero()
    };
    let cr = if order <= 2 { T::zero() } else { ci / ri };
    Ok(ConsistencyReport {
        lambda_max,
        ci,
        ri,
        cr,
        acceptable: cr <= real(CR_THRESHOLD),
    })
}

/// Map one criterion column of the decision matrix onto a Saaty-scale
/// pairwise matrix via the logarithmic transformation.
///
/// The column is Max-normalized first (cost criteria inverted), then for
/// F_i >= F_k the judgment is ln(F_i/F_k) / ln(r_max) * 8 + 1, where r_max
/// is the column's max/min ratio; the remaining entries are reciprocals.
/// A constant column maps to the all-ones matrix.
pub fn acm_to_pairwise<T: Real>(
    problem: &DecisionProblem<T>,
    criterion_index: usize,
) -> PairwiseMatrix<T> {
    assert!(
        criterion_index < problem.criterion_count(),
        "criterion index {criterion_index} out of range"
    );
    let m = problem.alternative_count();
    let labels = problem.alternatives().to_vec();
    let column: Vec<T> = (0..m)
        .map(|i| *problem.value(i, criterion_index))
        .collect();
    let normalized = max_normalize_column(&column, problem.criteria()[criterion_index].direction);
    let f_max = normalized.iter().copied().fold(normalized[0], T::max);
    let f_min = normalized.iter().copied().fold(normalized[0], T::min);
    let r_max = f_max / f_min;

    let mut entries = vec![T::one(); m * m];
    if r_max > T::one() {
        let ln_r_max = r_max.ln();
        let eight: T = real(8.0);
        for i in 0..m {
            for k in (i + 1)..m {
                let (hi, lo, flipped) = if normalized[i] >= normalized[k] {
                    (normalized[i], normalized[k], false)
                } else {
                    (normalized[k], normalized[i], true)
                };
                // ratio <= 1 guards the extreme pair against rounding past 9
                let ratio = ((hi / lo).ln() / ln_r_max).min(T::one());
                let value = ratio * eight + T::one();
                let (a_ik, a_ki) = if flipped {
                    (T::one() / value, value)
                } else {
                    (value, T::one() / value)
                };
                entries[i * m + k] = a_ik;
                entries[k * m + i] = a_ki;
            }
        }
    }
    PairwiseMatrix {
        order: m,
        entries,
        labels,
    }
}

fn max_normalize_column<T: Real>(column: &[T], direction: Direction) -> Vec<T> {
    match direction {
        Direction::Maximize => {
            let max = column.iter().copied().fold(column[0], T::max);
            column.iter().map(|x| *x / max).collect()
        }
        Direction::Minimize => {
            let min = column.iter().copied().fold(column[0], T::min);
            column.iter().map(|x| min / *x).collect()
        }
    }
}
