//! Aggregation-type multi-criteria decision-making over an
//! alternatives-criteria matrix.
//!
//! Eight methods share one validated [`DecisionProblem`]: SAW, MEW, AHP, ANP,
//! COPRAS, MOORA, FUCA, and WASPAS. The continuous pipelines are generic over
//! any [`Real`] float; the rank-based pieces (FUCA and tie handling) accept
//! any [`Scalar`], so they also run in exact rational arithmetic where tied
//! aggregated ranks must compare equal instead of drifting apart by rounding.

pub mod ahp;
pub mod anp;
pub mod error;
pub mod linalg;
pub mod methods_ratio;
pub mod methods_simple;
pub mod model;
pub mod normalization;
pub mod pairwise;
pub mod scalar;

pub use error::{Error, Result};
pub use model::{
    rank_from_scores, CriterionSpec, DecisionProblem, Direction, Method, NormScheme,
    RankingResult, ScoreMatrix, ScoreOrdering, Stage, WeightPolicy,
};
pub use scalar::{Real, Scalar};

/// Exact rational scalar with arbitrary-precision integers; weighted rank
/// sums computed in it never produce spurious near-ties.
pub type BigRational = num_rational::BigRational;

/// The f64 instantiations most callers want.
pub type Problem = DecisionProblem<f64>;
pub type Ranking = RankingResult<f64>;
pub type Scores = ScoreMatrix<f64>;

/// Exact-arithmetic instantiations for the rank-based path.
pub type ExactProblem = DecisionProblem<BigRational>;
pub type ExactRanking = RankingResult<BigRational>;
