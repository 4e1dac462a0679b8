//! Full AHP pipeline: criteria weights from a pairwise matrix, local
//! priorities per criterion (user-supplied matrices or the logarithmic
//! mapping of a decision matrix), and global aggregation.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::model::{DecisionProblem, Method, RankingResult, ScoreOrdering};
use crate::pairwise::{
    acm_to_pairwise, consistency, priority_vector, ConsistencyPolicy, ConsistencyReport,
    PairwiseMatrix,
};
use crate::scalar::Real;

/// Source of the criteria weights.
#[derive(Debug, Clone, PartialEq)]
pub enum CriteriaInput<T> {
    /// Eigen-derive the weights from a pairwise comparison matrix.
    Matrix(PairwiseMatrix<T>),
    /// Weights fixed in advance by the decision-maker.
    Weights(Vec<T>),
}

/// Source of the per-criterion alternative comparisons.
#[derive(Debug, Clone, PartialEq)]
pub enum AlternativeInput<T> {
    /// One m x m pairwise matrix per criterion, in criterion order.
    Matrices(Vec<PairwiseMatrix<T>>),
    /// Derive each matrix from the decision problem via the logarithmic
    /// Saaty-scale mapping.
    DeriveFromProblem,
}

/// Goal -> criteria -> alternatives hierarchy.
#[derive(Debug, Clone, PartialEq)]
pub struct AhpModel<T> {
    pub criteria: CriteriaInput<T>,
    pub alternatives: AlternativeInput<T>,
}

/// Local priority matrix (column j sums to 1) with one consistency report
/// per criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalPriorities<T> {
    pub matrix: Vec<Vec<T>>,
    pub reports: Vec<ConsistencyReport<T>>,
}

/// Everything the AHP run produces, for reporting.
#[derive(Debug, Clone, PartialEq)]
pub struct AhpOutcome<T> {
    pub weights: Vec<T>,
    /// Absent when the weights were supplied explicitly.
    pub criteria_report: Option<ConsistencyReport<T>>,
    pub local: LocalPriorities<T>,
    pub ranking: RankingResult<T>,
}

/// Criteria weights via the eigenvalue method, with consistency diagnostics.
pub fn ahp_criteria_weights<T: Real>(
    matrix: &PairwiseMatrix<T>,
    policy: ConsistencyPolicy,
) -> Result<(Vec<T>, ConsistencyReport<T>)> {
    let (weights, lambda) = priority_vector(matrix)?;
    let report = consistency(lambda, matrix.order())?;
    report.enforce(policy, "criteria comparison matrix")?;
    Ok((weights, report))
}

/// Local priority scores of the alternatives under every criterion.
///
/// `problem` is required when the model derives its alternative matrices
/// from the decision matrix.
pub fn ahp_local_priorities<T: Real>(
    model: &AhpModel<T>,
    problem: Option<&DecisionProblem<T>>,
    policy: ConsistencyPolicy,
) -> Result<LocalPriorities<T>> {
    let matrices: Vec<PairwiseMatrix<T>> = match &model.alternatives {
        AlternativeInput::Matrices(matrices) => matrices.clone(),
        AlternativeInput::DeriveFromProblem => {
            let problem = problem.ok_or(Error::MissingProblem)?;
            (0..problem.criterion_count())
                .map(|j| acm_to_pairwise(problem, j))
                .collect()
        }
    };
    if matrices.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    let m = matrices[0].order();
    let n = matrices.len();
    let mut columns = Vec::with_capacity(n);
    let mut reports = Vec::with_capacity(n);
    for (j, matrix) in matrices.iter().enumerate() {
        if matrix.order() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: matrix.order(),
            });
        }
        let (weights, lambda) = priority_vector(matrix)?;
        let report = consistency(lambda, matrix.order())?;
        report.enforce(policy, &format!("alternatives under criterion {}", j + 1))?;
        columns.push(weights);
        reports.push(report);
    }
    let matrix = (0..m)
        .map(|i| (0..n).map(|j| columns[j][i]).collect())
        .collect();
    Ok(LocalPriorities { matrix, reports })
}

/// Aggregate local priorities with the criteria weights into global
/// priorities; the columns and weights are convex, so the result sums to 1.
pub fn ahp_rank<T: Real>(weights: &[T], local: &[Vec<T>]) -> Result<RankingResult<T>> {
    let n = weights.len();
    for row in local {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
    }
    let scores: Vec<T> = local
        .iter()
        .map(|row| row.iter().zip(weights).map(|(v, w)| *v * *w).sum())
        .collect();
    Ok(RankingResult::from_scores(
        Method::Ahp,
        scores,
        ScoreOrdering::HigherScoreBetter,
        BTreeMap::new(),
    ))
}

/// Run the whole pipeline: weights, local priorities, global ranking.
pub fn ahp_evaluate<T: Real>(
    model: &AhpModel<T>,
    problem: Option<&DecisionProblem<T>>,
    policy: ConsistencyPolicy,
) -> Result<AhpOutcome<T>> {
    let (weights, criteria_report) = match &model.criteria {
        CriteriaInput::Matrix(matrix) => {
            let (weights, report) = ahp_criteria_weights(matrix, policy)?;
            (weights, Some(report))
        }
        CriteriaInput::Weights(weights) => (weights.clone(), None),
    };
    let local = ahp_local_priorities(model, problem, policy)?;
    let ranking = ahp_rank(&weights, &local.matrix)?;
    Ok(AhpOutcome {
        weights,
        criteria_report,
        local,
        ranking,
    })
}
