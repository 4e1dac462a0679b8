//! The three column-wise normalization schemes (Max, Sum, Vector) and weight
//! application.
//!
//! Max normalization converts cost criteria to benefit type (divide the
//! column minimum by the value), so its output is direction-free. Sum and
//! Vector normalization are applied uniformly regardless of direction; the
//! direction tags travel with the result for the later benefit/cost splits.

use crate::error::{Error, Result};
use crate::model::{DecisionProblem, Direction, NormScheme, ScoreMatrix, Stage};
use crate::scalar::Real;

/// Max normalization: benefit columns scaled by the column maximum, cost
/// columns inverted against the column minimum. Entries land in (0, 1].
pub fn normalize_max<T: Real>(problem: &DecisionProblem<T>) -> ScoreMatrix<T> {
    let m = problem.alternative_count();
    let n = problem.criterion_count();
    let mut values = vec![vec![T::zero(); n]; m];
    for (j, criterion) in problem.criteria().iter().enumerate() {
        match criterion.direction {
            Direction::Maximize => {
                let max = column_fold(problem, j, T::max);
                for (i, row) in values.iter_mut().enumerate() {
                    row[j] = *problem.value(i, j) / max;
                }
            }
            Direction::Minimize => {
                let min = column_fold(problem, j, T::min);
                for (i, row) in values.iter_mut().enumerate() {
                    row[j] = min / *problem.value(i, j);
                }
            }
        }
    }
    ScoreMatrix {
        stage: Stage::Normalized,
        scheme: NormScheme::Max,
        values,
        directions: vec![Direction::Maximize; n],
    }
}

/// Sum normalization: each value divided by its column total, applied
/// uniformly to both directions.
pub fn normalize_sum<T: Real>(problem: &DecisionProblem<T>) -> ScoreMatrix<T> {
    let m = problem.alternative_count();
    let n = problem.criterion_count();
    let mut values = vec![vec![T::zero(); n]; m];
    for j in 0..n {
        let total = (0..m).map(|i| *problem.value(i, j)).sum();
        for (i, row) in values.iter_mut().enumerate() {
            row[j] = *problem.value(i, j) / total;
        }
    }
    ScoreMatrix {
        stage: Stage::Normalized,
        scheme: NormScheme::Sum,
        values,
        directions: problem.directions(),
    }
}

/// Vector normalization: each value divided by the column Euclidean norm,
/// applied uniformly to both directions.
pub fn normalize_vector<T: Real>(problem: &DecisionProblem<T>) -> ScoreMatrix<T> {
    let m = problem.alternative_count();
    let n = problem.criterion_count();
    let mut values = vec![vec![T::zero(); n]; m];
    for j in 0..n {
        let norm = (0..m)
            .map(|i| {
                let x = *problem.value(i, j);
                x * x
            })
            .sum::<T>()
            .sqrt();
        for (i, row) in values.iter_mut().enumerate() {
            row[j] = *problem.value(i, j) / norm;
        }
    }
    ScoreMatrix {
        stage: Stage::Normalized,
        scheme: NormScheme::Vector,
        values,
        directions: problem.directions(),
    }
}

/// Multiply each normalized column by its criterion weight.
///
/// Panics if the input is not at the `Normalized` stage; handing a weighted
/// matrix back in is a programming error, not a recoverable condition.
pub fn apply_weights<T: Real>(normalized: &ScoreMatrix<T>, weights: &[T]) -> Result<ScoreMatrix<T>> {
    assert_eq!(
        normalized.stage,
        Stage::Normalized,
        "apply_weights expects a normalized matrix"
    );
    let n = normalized.col_count();
    if weights.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: weights.len(),
        });
    }
    let values = normalized
        .values
        .iter()
        .map(|row| row.iter().zip(weights).map(|(v, w)| *v * *w).collect())
        .collect();
    Ok(ScoreMatrix {
        stage: Stage::Weighted,
        scheme: normalized.scheme,
        values,
        directions: normalized.directions.clone(),
    })
}

fn column_fold<T: Real>(problem: &DecisionProblem<T>, col: usize, pick: fn(T, T) -> T) -> T {
    (0..problem.alternative_count())
        .map(|i| *problem.value(i, col))
        .reduce(pick)
        .expect("validated problem has at least one row")
}
