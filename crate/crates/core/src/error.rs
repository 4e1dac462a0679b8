//! Error type shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or evaluating a decision
/// problem. Scalar payloads are reported as `f64` regardless of the working
/// scalar type.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("decision matrix has no rows or no columns")]
    EmptyMatrix,
    #[error("value at row {row}, column {col} is not strictly positive: {value}")]
    NonPositiveValue { row: usize, col: usize, value: f64 },
    #[error("value at row {row}, column {col} is not finite")]
    NonFiniteValue { row: usize, col: usize },
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("labels must be non-empty")]
    EmptyLabel,
    #[error("criterion weights sum to {sum}, expected 1 within {tolerance}")]
    WeightSumError { sum: f64, tolerance: f64 },
    #[error("weight of criterion {label} is outside (0, 1]: {value}")]
    WeightOutOfRange { label: String, value: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("missing pairwise comparison ({i}, {j})")]
    MissingComparison { i: usize, j: usize },
    #[error("duplicate pairwise comparison ({i}, {j})")]
    DuplicateComparison { i: usize, j: usize },
    #[error("comparison index ({i}, {j}) is not an upper-triangle pair for order {order}")]
    InvalidComparisonIndex { i: usize, j: usize, order: usize },
    #[error("pairwise value {0} outside the Saaty range [1/9, 9]")]
    ScaleViolation(f64),
    #[error("diagonal entry {0} of a pairwise matrix is not 1")]
    DiagonalNotUnit(usize),
    #[error("entries ({i}, {j}) and ({j}, {i}) are not reciprocal")]
    ReciprocityViolation { i: usize, j: usize },
    #[error("order {0} outside the supported range 1..=10 for consistency analysis")]
    OrderOutOfRange(usize),
    #[error("inconsistent judgments for {context}: CR = {cr:.4} exceeds 0.1")]
    InconsistentJudgments { context: String, cr: f64 },
    #[error("alternative matrices are derived from the decision matrix, but no problem was supplied")]
    MissingProblem,
    #[error("lambda {0} outside [0, 1]")]
    LambdaOutOfRange(f64),
    #[error("nonzero column {0} of the supermatrix does not sum to 1")]
    NotColumnStochastic(usize),
    #[error("goal column of the limit supermatrix has no mass on the alternatives cluster")]
    ZeroGoalColumn,
    #[error("unknown node: {0}")]
    UnknownNode(String),
    #[error("unknown cluster: {0}")]
    UnknownCluster(String),
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("unknown method: {0}")]
    UnknownMethod(String),
}
