//! Report structures and the three output renderings: an aligned table for
//! humans (4 decimal places, matching the walkthrough tables), JSON at full
//! binary precision, and a flat CSV of the main result table.

use std::collections::BTreeMap;

use serde::Serialize;

use mcdm_core::pairwise::ConsistencyReport;
use mcdm_core::{Direction, Problem, RankingResult, ScoreOrdering};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

/// Pick the output format: the flag wins, then `MCDM_FORMAT`, then the table
/// view.
pub fn resolve_format(flag: Option<Format>) -> CliResult<Format> {
    if let Some(format) = flag {
        return Ok(format);
    }
    match std::env::var("MCDM_FORMAT") {
        Ok(value) => match value.to_ascii_lowercase().as_str() {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Usage(format!(
                "MCDM_FORMAT must be table, json, or csv, got {other:?}"
            ))),
        },
        Err(_) => Ok(Format::Table),
    }
}

// ---------------------------------------------------------------------------
// Serializable echoes
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct ProblemEcho {
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionEcho>,
    pub values: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionEcho {
    pub label: String,
    pub direction: String,
    pub weight: f64,
}

impl ProblemEcho {
    pub fn from_problem(problem: &Problem) -> Self {
        Self {
            alternatives: problem.alternatives().to_vec(),
            criteria: problem
                .criteria()
                .iter()
                .map(|c| CriterionEcho {
                    label: c.label.clone(),
                    direction: match c.direction {
                        Direction::Maximize => "max".into(),
                        Direction::Minimize => "min".into(),
                    },
                    weight: c.weight,
                })
                .collect(),
            values: problem.values().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankingEcho {
    pub method: String,
    pub scores: Vec<f64>,
    pub ranks: Vec<f64>,
    pub ordering: String,
    pub ranking: String,
    pub diagnostics: BTreeMap<String, f64>,
}

impl RankingEcho {
    pub fn new(labels: &[String], result: &RankingResult<f64>) -> Self {
        Self {
            method: result.method.name().to_string(),
            scores: result.scores.clone(),
            ranks: result.ranks.clone(),
            ordering: match result.ordering {
                ScoreOrdering::HigherScoreBetter => "higher_score_better".into(),
                ScoreOrdering::LowerScoreBetter => "lower_score_better".into(),
            },
            ranking: ranking_notation(labels, &result.ranks),
            diagnostics: result.diagnostics.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyEcho {
    pub lambda_max: f64,
    pub ci: f64,
    pub ri: f64,
    pub cr: f64,
    pub acceptable: bool,
}

impl ConsistencyEcho {
    pub fn new(report: &ConsistencyReport<f64>) -> Self {
        Self {
            lambda_max: report.lambda_max,
            ci: report.ci,
            ri: report.ri,
            cr: report.cr,
            acceptable: report.acceptable,
        }
    }
}

// ---------------------------------------------------------------------------
// Shared rendering helpers
// ---------------------------------------------------------------------------

/// "A3 > A4 > A1 = A2" style notation; tied alternatives keep input order.
pub fn ranking_notation(labels: &[String], ranks: &[f64]) -> String {
    let mut order: Vec<usize> = (0..labels.len()).collect();
    order.sort_by(|&a, &b| ranks[a].total_cmp(&ranks[b]).then(a.cmp(&b)));
    let mut out = String::new();
    for (pos, &idx) in order.iter().enumerate() {
        if pos > 0 {
            let tied = ranks[idx] == ranks[order[pos - 1]];
            out.push_str(if tied { " = " } else { " > " });
        }
        out.push_str(&labels[idx]);
    }
    out
}

pub fn fmt_score(value: f64) -> String {
    format!("{value:.4}")
}

/// Integral ranks print bare, fractional tie ranks keep one decimal.
pub fn fmt_rank(value: f64) -> String {
    if value.fract() == 0.0 {
        format!("{value:.0}")
    } else {
        format!("{value:.1}")
    }
}

/// Left-aligned column layout with two-space gutters.
pub fn render_table(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (j, cell) in row.iter().enumerate() {
            widths[j] = widths[j].max(cell.len());
        }
    }
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            if j + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[j]));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

pub fn render_csv(header: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
