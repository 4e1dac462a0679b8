//! Decision problems, score containers, and ranking results shared by all
//! methods.
//!
//! A [`DecisionProblem`] is validated on construction and immutable
//! afterwards, so every method can assume its invariants hold: a non-empty
//! matrix of finite, strictly positive values, unique labels, and weights in
//! (0, 1] summing to 1.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{lossy, Scalar};

/// Whether a criterion is a benefit (maximize) or a cost (minimize).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Maximize,
    Minimize,
}

/// A named criterion with its optimization direction and weight.
#[derive(Debug, Clone, PartialEq)]
pub struct CriterionSpec<T> {
    pub label: String,
    pub direction: Direction,
    pub weight: T,
}

impl<T> CriterionSpec<T> {
    pub fn new(label: impl Into<String>, direction: Direction, weight: T) -> Self {
        Self {
            label: label.into(),
            direction,
            weight,
        }
    }
}

/// How to treat criterion weights that do not sum to 1 at ingestion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightPolicy {
    /// Reject weight sums off by more than the tolerance.
    #[default]
    Strict,
    /// Rescale all weights by their sum before validating.
    Renormalize,
}

/// Named alternatives x named criteria matrix of performance values.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem<T> {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec<T>>,
    values: Vec<Vec<T>>,
}

impl<T: Scalar> DecisionProblem<T> {
    /// Build and validate a decision problem. Weight sums must match 1
    /// within 1e-6.
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec<T>>,
        values: Vec<Vec<T>>,
    ) -> Result<Self> {
        Self::with_weight_policy(alternatives, criteria, values, WeightPolicy::Strict)
    }

    /// Build with an explicit weight policy.
    pub fn with_weight_policy(
        alternatives: Vec<String>,
        mut criteria: Vec<CriterionSpec<T>>,
        values: Vec<Vec<T>>,
        policy: WeightPolicy,
    ) -> Result<Self> {
        if policy == WeightPolicy::Renormalize && !criteria.is_empty() {
            let sum = criteria
                .iter()
                .fold(T::zero(), |acc, c| acc + c.weight.clone());
            if sum > T::zero() {
                for c in &mut criteria {
                    c.weight = c.weight.clone() / sum.clone();
                }
            }
        }
        let problem = Self {
            alternatives,
            criteria,
            values,
        };
        problem.validate()?;
        Ok(problem)
    }

    /// Check every invariant; idempotent on an already valid problem.
    pub fn validate(&self) -> Result<()> {
        let m = self.alternatives.len();
        let n = self.criteria.len();
        if m == 0 || n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if self.values.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                got: self.values.len(),
            });
        }
        let mut seen = BTreeSet::new();
        for label in &self.alternatives {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if !seen.insert(label.clone()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        let mut seen = BTreeSet::new();
        for criterion in &self.criteria {
            if criterion.label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if !seen.insert(criterion.label.clone()) {
                return Err(Error::DuplicateLabel(criterion.label.clone()));
            }
        }
        for (i, row) in self.values.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, value) in row.iter().enumerate() {
                if !value.is_finite_scalar() {
                    return Err(Error::NonFiniteValue { row: i, col: j });
                }
                if *value <= T::zero() {
                    return Err(Error::NonPositiveValue {
                        row: i,
                        col: j,
                        value: lossy(value),
                    });
                }
            }
        }
        for criterion in &self.criteria {
            if !criterion.weight.is_finite_scalar()
                || criterion.weight <= T::zero()
                || criterion.weight > T::one()
            {
                return Err(Error::WeightOutOfRange {
                    label: criterion.label.clone(),
                    value: lossy(&criterion.weight),
                });
            }
        }
        let tolerance = T::one() / T::from_u32(1_000_000).unwrap();
        let sum = self
            .criteria
            .iter()
            .fold(T::zero(), |acc, c| acc + c.weight.clone());
        if (sum.clone() - T::one()).abs() > tolerance {
            return Err(Error::WeightSumError {
                sum: lossy(&sum),
                tolerance: 1e-6,
            });
        }
        Ok(())
    }

    pub fn alternative_count(&self) -> usize {
        self.alternatives.len()
    }

    pub fn criterion_count(&self) -> usize {
        self.criteria.len()
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec<T>] {
        &self.criteria
    }

    pub fn values(&self) -> &[Vec<T>] {
        &self.values
    }

    pub fn value(&self, row: usize, col: usize) -> &T {
        &self.values[row][col]
    }

    pub fn weights(&self) -> Vec<T> {
        self.criteria.iter().map(|c| c.weight.clone()).collect()
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.criteria.iter().map(|c| c.direction).collect()
    }

    /// Same matrix and directions under replacement weights; used by the
    /// hybrid pipeline that feeds eigen-derived weights into another method.
    pub fn with_weights(&self, weights: &[T]) -> Result<Self> {
        if weights.len() != self.criteria.len() {
            return Err(Error::DimensionMismatch {
                expected: self.criteria.len(),
                got: weights.len(),
            });
        }
        let criteria = self
            .criteria
            .iter()
            .zip(weights)
            .map(|(c, w)| CriterionSpec::new(c.label.clone(), c.direction, w.clone()))
            .collect();
        Self::new(self.alternatives.clone(), criteria, self.values.clone())
    }
}

/// Normalization scheme recorded on a [`ScoreMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormScheme {
    Max,
    Sum,
    Vector,
}

/// Pipeline stage of a [`ScoreMatrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Normalized,
    Weighted,
}

/// Stage-tagged m x n score matrix together with the scheme that produced it
/// and the per-criterion directions it still carries.
///
/// Max normalization converts cost criteria, so its output is tagged
/// all-benefit; Sum and Vector schemes keep the original directions for the
/// later benefit/cost splits.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix<T> {
    pub stage: Stage,
    pub scheme: NormScheme,
    pub values: Vec<Vec<T>>,
    pub directions: Vec<Direction>,
}

impl<T> ScoreMatrix<T> {
    pub fn row_count(&self) -> usize {
        self.values.len()
    }

    pub fn col_count(&self) -> usize {
        self.values.first().map_or(0, Vec::len)
    }
}

/// Direction of preference for a score vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScoreOrdering {
    HigherScoreBetter,
    LowerScoreBetter,
}

/// Method identifier carried on every ranking result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Saw,
    Mew,
    Ahp,
    Anp,
    Copras,
    Moora,
    Fuca,
    Waspas,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Saw => "saw",
            Method::Mew => "mew",
            Method::Ahp => "ahp",
            Method::Anp => "anp",
            Method::Copras => "copras",
            Method::Moora => "moora",
            Method::Fuca => "fuca",
            Method::Waspas => "waspas",
        }
    }

    /// The six methods that run directly on an alternatives-criteria matrix.
    pub fn acm_methods() -> [Method; 6] {
        [
            Method::Saw,
            Method::Mew,
            Method::Copras,
            Method::Moora,
            Method::Fuca,
            Method::Waspas,
        ]
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "saw" => Ok(Method::Saw),
            "mew" => Ok(Method::Mew),
            "ahp" => Ok(Method::Ahp),
            "anp" => Ok(Method::Anp),
            "copras" => Ok(Method::Copras),
            "moora" => Ok(Method::Moora),
            "fuca" => Ok(Method::Fuca),
            "waspas" => Ok(Method::Waspas),
            other => Err(Error::UnknownMethod(other.to_string())),
        }
    }
}

/// Per-alternative scores and ranks produced by one method.
///
/// Ranks are scalars rather than integers so tied scores can share the
/// average of the positions they span.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingResult<T> {
    pub method: Method,
    pub scores: Vec<T>,
    pub ranks: Vec<T>,
    pub ordering: ScoreOrdering,
    pub diagnostics: BTreeMap<String, T>,
}

impl<T: Scalar> RankingResult<T> {
    pub fn from_scores(
        method: Method,
        scores: Vec<T>,
        ordering: ScoreOrdering,
        diagnostics: BTreeMap<String, T>,
    ) -> Self {
        let ranks = rank_from_scores(&scores, ordering);
        Self {
            method,
            scores,
            ranks,
            ordering,
            diagnostics,
        }
    }
}

/// Assign rank 1 to the best score under the given ordering; tied scores
/// receive the arithmetic mean of the rank positions they occupy, so rank
/// sums are always m(m+1)/2.
pub fn rank_from_scores<T: Scalar>(scores: &[T], ordering: ScoreOrdering) -> Vec<T> {
    let m = scores.len();
    let mut order: Vec<usize> = (0..m).collect();
    // Stable sort keeps input order among exact ties.
    order.sort_by(|&a, &b| {
        let cmp = scores[a]
            .partial_cmp(&scores[b])
            .expect("scores must be finite and comparable");
        match ordering {
            ScoreOrdering::HigherScoreBetter => cmp.reverse(),
            ScoreOrdering::LowerScoreBetter => cmp,
        }
    });
    let two = T::from_u8(2).unwrap();
    let mut ranks = vec![T::zero(); m];
    let mut start = 0;
    while start < m {
        let mut end = start;
        while end + 1 < m && scores[order[end + 1]] == scores[order[start]] {
            end += 1;
        }
        // 1-based positions start+1 ..= end+1 share their mean rank.
        let mean = T::from_usize(start + end + 2).unwrap() / two.clone();
        for &idx in &order[start..=end] {
            ranks[idx] = mean.clone();
        }
        start = end + 1;
    }
    ranks
}
