//! SAW, MEW, and WASPAS: the three methods built on Max normalization.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{DecisionProblem, Method, RankingResult, ScoreOrdering};
use crate::normalization::{apply_weights, normalize_max};
use crate::scalar::{lossy, Real};

/// Blend parameter used by [`waspas`] when the caller does not choose one.
pub const DEFAULT_LAMBDA: f64 = 0.5;

/// Simple additive weighting: weighted sum of the Max-normalized matrix.
pub fn saw<T: Real>(problem: &DecisionProblem<T>) -> RankingResult<T> {
    let scores = saw_scores(problem);
    RankingResult::from_scores(
        Method::Saw,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    )
}

/// Multiplicative exponent weighting: product of Max-normalized values
/// raised to their weights.
pub fn mew<T: Real>(problem: &DecisionProblem<T>) -> RankingResult<T> {
    let scores = mew_scores(problem);
    RankingResult::from_scores(
        Method::Mew,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    )
}

/// WASPAS: lambda-blend of the SAW and MEW scores. Lambda 1 reduces to SAW,
/// lambda 0 to MEW.
pub fn waspas<T: Real>(problem: &DecisionProblem<T>, lambda: T) -> Result<RankingResult<T>> {
    if !lambda.is_finite() || lambda < T::zero() || lambda > T::one() {
        return Err(Error::LambdaOutOfRange(lossy(&lambda)));
    }
    let additive = saw_scores(problem);
    let multiplicative = mew_scores(problem);
    let scores = additive
        .into_iter()
        .zip(multiplicative)
        .map(|(s, m)| lambda * s + (T::one() - lambda) * m)
        .collect();
    let mut diagnostics = BTreeMap::new();
    diagnostics.insert("lambda".to_string(), lambda);
    Ok(RankingResult::from_scores(
        Method::Waspas,
        scores,
        ScoreOrdering::HigherScoreBetter,
        diagnostics,
    ))
}

/// One WASPAS evaluation per lambda, in input order.
pub fn waspas_sweep<T: Real>(
    problem: &DecisionProblem<T>,
    lambdas: &[T],
) -> Result<Vec<RankingResult<T>>> {
    lambdas
        .iter()
        .map(|lambda| waspas(problem, *lambda))
        .collect()
}

fn saw_scores<T: Real>(problem: &DecisionProblem<T>) -> Vec<T> {
    let weighted = apply_weights(&normalize_max(problem), &problem.weights())
        .expect("problem weights match its criterion count");
    weighted
        .values
        .iter()
        .map(|row| row.iter().copied().sum())
        .collect()
}

fn mew_scores<T: Real>(problem: &DecisionProblem<T>) -> Vec<T> {
    // exp of the weighted log-sum rather than a raw product; identical for
    // positive inputs and robust at large n
    let normalized = normalize_max(problem);
    let weights = problem.weights();
    normalized
        .values
        .iter()
        .map(|row| {
            row.iter()
                .zip(&weights)
                .map(|(f, w)| *w * f.ln())
                .sum::<T>()
                .exp()
        })
        .collect()
}
