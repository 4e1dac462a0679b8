//! COPRAS, MOORA, and FUCA: methods that keep criterion direction explicit
//! through the aggregation.
//!
//! COPRAS and MOORA split the weighted normalized matrix into benefit and
//! cost sums; FUCA aggregates per-criterion ranks and is the one method
//! where a lower score is better. FUCA needs nothing beyond ordering and
//! exact arithmetic, so it accepts any [`Scalar`], including rationals.

use std::collections::BTreeMap;

use crate::model::{
    rank_from_scores, DecisionProblem, Direction, Method, RankingResult, ScoreMatrix,
    ScoreOrdering, Stage,
};
use crate::normalization::{apply_weights, normalize_sum, normalize_vector};
use crate::scalar::{Real, Scalar};

/// Benefit and cost sums of a weighted normalized matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitSums<T> {
    pub s_plus: Vec<T>,
    pub s_minus: Vec<T>,
    /// Number of maximization criteria.
    pub benefit_count: usize,
}

/// Sum the weighted values per alternative, separately over maximization and
/// minimization criteria. Columns are never reordered; the direction flags
/// drive the split.
pub fn split_sums<T: Real>(weighted: &ScoreMatrix<T>, directions: &[Direction]) -> SplitSums<T> {
    assert_eq!(
        weighted.stage,
        Stage::Weighted,
        "split_sums expects a weighted matrix"
    );
    assert_eq!(weighted.col_count(), directions.len());
    let mut s_plus = Vec::with_capacity(weighted.row_count());
    let mut s_minus = Vec::with_capacity(weighted.row_count());
    for row in &weighted.values {
        let mut plus = T::zero();
        let mut minus = T::zero();
        for (value, direction) in row.iter().zip(directions) {
            match direction {
                Direction::Maximize => plus = plus + *value,
                Direction::Minimize => minus = minus + *value,
            }
        }
        s_plus.push(plus);
        s_minus.push(minus);
    }
    SplitSums {
        s_plus,
        s_minus,
        benefit_count: directions
            .iter()
            .filter(|d| **d == Direction::Maximize)
            .count(),
    }
}

/// COPRAS: Sum-normalize, weight, split, then reward small cost sums through
/// the scaled reciprocal term.
pub fn copras<T: Real>(problem: &DecisionProblem<T>) -> RankingResult<T> {
    let weighted = apply_weights(&normalize_sum(problem), &problem.weights())
        .expect("problem weights match its criterion count");
    let directions = problem.directions();
    let sums = split_sums(&weighted, &directions);
    let n = problem.criterion_count();
    let m = problem.alternative_count();

    let scores: Vec<T> = if sums.benefit_count == n {
        sums.s_plus.clone()
    } else {
        // Positive inputs guarantee every S_i- > 0 once cost criteria exist.
        let total_minus: T = sums.s_minus.iter().copied().sum();
        let total_inverse: T = sums.s_minus.iter().map(|s| T::one() / *s).sum();
        (0..m)
            .map(|i| {
                let cost_term = total_minus / (sums.s_minus[i] * total_inverse);
                if sums.benefit_count == 0 {
                    cost_term
                } else {
                    sums.s_plus[i] + cost_term
                }
            })
            .collect()
    };
    RankingResult::from_scores(
        Method::Copras,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    )
}

/// MOORA ratio system: Vector-normalize, weight, then benefit sum minus cost
/// sum. Scores may be negative.
pub fn moora<T: Real>(problem: &DecisionProblem<T>) -> RankingResult<T> {
    let weighted = apply_weights(&normalize_vector(problem), &problem.weights())
        .expect("problem weights match its criterion count");
    let sums = split_sums(&weighted, &problem.directions());
    let scores = sums
        .s_plus
        .into_iter()
        .zip(sums.s_minus)
        .map(|(plus, minus)| plus - minus)
        .collect();
    RankingResult::from_scores(
        Method::Moora,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    )
}

/// Rank of every alternative under every criterion: rank 1 goes to the
/// highest value of a benefit criterion and the lowest of a cost criterion;
/// ties share averaged ranks.
pub fn criterion_ranks<T: Scalar>(problem: &DecisionProblem<T>) -> Vec<Vec<T>> {
    let m = problem.alternative_count();
    let n = problem.criterion_count();
    let mut ranks = vec![vec![T::zero(); n]; m];
    for (j, criterion) in problem.criteria().iter().enumerate() {
        let column: Vec<T> = (0..m).map(|i| problem.value(i, j).clone()).collect();
        let ordering = match criterion.direction {
            Direction::Maximize => ScoreOrdering::HigherScoreBetter,
            Direction::Minimize => ScoreOrdering::LowerScoreBetter,
        };
        for (i, rank) in rank_from_scores(&column, ordering).into_iter().enumerate() {
            ranks[i][j] = rank;
        }
    }
    ranks
}

/// FUCA: weighted sum of the per-criterion ranks; the smallest aggregated
/// rank wins.
pub fn fuca<T: Scalar>(problem: &DecisionProblem<T>) -> RankingResult<T> {
    let ranks = criterion_ranks(problem);
    let weights = problem.weights();
    let scores = ranks
        .iter()
        .map(|row| {
            row.iter()
                .zip(&weights)
                .fold(T::zero(), |acc, (r, w)| acc + r.clone() * w.clone())
        })
        .collect();
    RankingResult::from_scores(
        Method::Fuca,
        scores,
        ScoreOrdering::LowerScoreBetter,
        BTreeMap::new(),
    )
}
