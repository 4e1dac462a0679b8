//! File ingestion: CSV and JSON decision problems, optional AHP sections,
//! optional ANP network sections, and the bundled fixtures.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use mcdm_core::anp::{AnpNetwork, Cluster, InfluenceBlock};
use mcdm_core::pairwise::PairwiseMatrix;
use mcdm_core::{
    CriterionSpec, DecisionProblem, Direction, ExactProblem, Problem, WeightPolicy,
};

use crate::decimal::{parse_number, parse_pair, to_f64};
use crate::error::{CliError, CliResult};

/// Fixture name -> embedded content; resolved when the path names no
/// existing file.
const FIXTURES: &[(&str, &str)] = &[
    ("table8_1", include_str!("../fixtures/table8_1.csv")),
    ("e8_1", include_str!("../fixtures/e8_1.csv")),
    ("e8_2", include_str!("../fixtures/e8_2.csv")),
    ("e8_3", include_str!("../fixtures/e8_3.csv")),
    ("ahp_8_4", include_str!("../fixtures/ahp_8_4.json")),
    ("anp_8_5", include_str!("../fixtures/anp_8_5.json")),
];

/// Names of all bundled fixtures, for help text.
pub fn fixture_names() -> Vec<&'static str> {
    FIXTURES.iter().map(|(name, _)| *name).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Auto,
    Csv,
    Json,
}

/// Parsed input file: the decision matrix (absent for pure network files)
/// plus the optional AHP and ANP sections.
pub struct ProblemFile {
    pub path: String,
    pub problem: Option<Problem>,
    pub exact: Option<ExactProblem>,
    pub ahp: Option<AhpSection>,
    pub anp: Option<AnpSection>,
}

pub struct AhpSection {
    pub criteria_matrix: Option<PairwiseMatrix<f64>>,
    pub alternative_matrices: Option<Vec<PairwiseMatrix<f64>>>,
}

pub struct AnpSection {
    pub network: AnpNetwork<f64>,
    pub goal: String,
    pub alternatives_cluster: String,
}

impl ProblemFile {
    pub fn require_problem(&self) -> CliResult<(&Problem, &ExactProblem)> {
        match (&self.problem, &self.exact) {
            (Some(problem), Some(exact)) => Ok((problem, exact)),
            _ => Err(CliError::parse(
                &self.path,
                0,
                "this command needs a decision matrix (alternatives, criteria, values)",
            )),
        }
    }

    pub fn require_anp(&self) -> CliResult<&AnpSection> {
        self.anp.as_ref().ok_or_else(|| {
            CliError::parse(&self.path, 0, "this command needs an `anp` network section")
        })
    }
}

/// Read and parse a problem file; `source` may also name a bundled fixture.
pub fn load_problem(
    source: &str,
    format: InputFormat,
    policy: WeightPolicy,
) -> CliResult<ProblemFile> {
    let (content, label) = if Path::new(source).exists() {
        let content = std::fs::read_to_string(source).map_err(|err| CliError::Io {
            path: source.to_string(),
            source: err,
        })?;
        (content, source.to_string())
    } else if let Some((name, fixture)) = FIXTURES.iter().find(|(name, _)| *name == source) {
        ((*fixture).to_string(), format!("fixture:{name}"))
    } else {
        return Err(CliError::Io {
            path: source.to_string(),
            source: std::io::Error::new(
                std::io::ErrorKind::NotFound,
                format!(
                    "no such file, and no bundled fixture named {source:?} (available: {})",
                    fixture_names().join(", ")
                ),
            ),
        });
    };

    let format = match format {
        InputFormat::Auto => detect_format(source, &content),
        other => other,
    };
    match format {
        InputFormat::Json => parse_json(&label, &content, policy),
        _ => parse_csv(&label, &content, policy),
    }
}

fn detect_format(source: &str, content: &str) -> InputFormat {
    let by_extension = Path::new(source)
        .extension()
        .and_then(|ext| ext.to_str())
        .map(|ext| ext.to_ascii_lowercase());
    match by_extension.as_deref() {
        Some("json") => InputFormat::Json,
        Some("csv") => InputFormat::Csv,
        _ => {
            if content.trim_start().starts_with('{') {
                InputFormat::Json
            } else {
                InputFormat::Csv
            }
        }
    }
}

fn parse_direction(text: &str, path: &str, line: usize) -> CliResult<Direction> {
    match text.trim().to_ascii_lowercase().as_str() {
        "max" | "maximize" | "benefit" => Ok(Direction::Maximize),
        "min" | "minimize" | "cost" => Ok(Direction::Minimize),
        other => Err(CliError::parse(
            path,
            line,
            format!("direction must be max or min, got {other:?}"),
        )),
    }
}

fn build_problems(
    path: &str,
    alternatives: Vec<String>,
    labels: Vec<String>,
    directions: Vec<Direction>,
    weights: Vec<(f64, num_rational::BigRational)>,
    values: Vec<Vec<(f64, num_rational::BigRational)>>,
    policy: WeightPolicy,
) -> CliResult<(Problem, ExactProblem)> {
    let criteria_f64 = labels
        .iter()
        .zip(&directions)
        .zip(&weights)
        .map(|((label, direction), (weight, _))| {
            CriterionSpec::new(label.clone(), *direction, *weight)
        })
        .collect();
    let criteria_exact = labels
        .iter()
        .zip(&directions)
        .zip(&weights)
        .map(|((label, direction), (_, weight))| {
            CriterionSpec::new(label.clone(), *direction, weight.clone())
        })
        .collect();
    let values_f64 = values
        .iter()
        .map(|row| row.iter().map(|(v, _)| *v).collect())
        .collect();
    let values_exact = values
        .iter()
        .map(|row| row.iter().map(|(_, v)| v.clone()).collect())
        .collect();
    let problem =
        DecisionProblem::with_weight_policy(alternatives.clone(), criteria_f64, values_f64, policy)
            .map_err(CliError::from)?;
    let exact =
        DecisionProblem::with_weight_policy(alternatives, criteria_exact, values_exact, policy)
            .map_err(|err| {
                // the f64 view already validated; only boundary cases differ
                CliError::parse(path, 0, format!("exact-arithmetic validation failed: {err}"))
            })?;
    Ok((problem, exact))
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

fn parse_csv(path: &str, content: &str, policy: WeightPolicy) -> CliResult<ProblemFile> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(content.as_bytes());
    let mut rows: Vec<Vec<String>> = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let record = record.map_err(|err| CliError::parse(path, idx + 1, err.to_string()))?;
        if record.iter().all(str::is_empty) {
            continue;
        }
        rows.push(record.iter().map(str::to_string).collect());
    }
    if rows.len() < 4 {
        return Err(CliError::parse(
            path,
            rows.len(),
            "expected header, direction, weight, and at least one alternative row",
        ));
    }

    let header = &rows[0];
    if !header[0].eq_ignore_ascii_case("alternative") || header.len() < 2 {
        return Err(CliError::parse(
            path,
            1,
            "first row must be `alternative` followed by criterion labels",
        ));
    }
    let labels: Vec<String> = header[1..].to_vec();
    let n = labels.len();

    let expect_row = |row: &[String], name: &str, line: usize| -> CliResult<()> {
        if !row[0].eq_ignore_ascii_case(name) {
            return Err(CliError::parse(
                path,
                line,
                format!("row {line} must start with `{name}`"),
            ));
        }
        if row.len() != n + 1 {
            return Err(CliError::parse(
                path,
                line,
                format!("expected {} fields, got {}", n + 1, row.len()),
            ));
        }
        Ok(())
    };

    expect_row(&rows[1], "direction", 2)?;
    let directions = rows[1][1..]
        .iter()
        .map(|cell| parse_direction(cell, path, 2))
        .collect::<CliResult<Vec<_>>>()?;

    expect_row(&rows[2], "weight", 3)?;
    let weights = rows[2][1..]
        .iter()
        .enumerate()
        .map(|(j, cell)| {
            parse_pair(cell).map_err(|message| {
                CliError::parse(path, 3, format!("weight column {}: {message}", j + 1))
            })
        })
        .collect::<CliResult<Vec<_>>>()?;

    let mut alternatives = Vec::new();
    let mut values = Vec::new();
    for (offset, row) in rows[3..].iter().enumerate() {
        let line = offset + 4;
        if row.len() != n + 1 {
            return Err(CliError::parse(
                path,
                line,
                format!("expected {} fields, got {}", n + 1, row.len()),
            ));
        }
        alternatives.push(row[0].clone());
        let parsed = row[1..]
            .iter()
            .enumerate()
            .map(|(j, cell)| {
                parse_pair(cell).map_err(|message| {
                    CliError::parse(path, line, format!("column {}: {message}", j + 2))
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        values.push(parsed);
    }

    let (problem, exact) =
        build_problems(path, alternatives, labels, directions, weights, values, policy)?;
    Ok(ProblemFile {
        path: path.to_string(),
        problem: Some(problem),
        exact: Some(exact),
        ahp: None,
        anp: None,
    })
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileJson {
    #[serde(default)]
    alternatives: Option<Vec<String>>,
    #[serde(default)]
    criteria: Option<Vec<CriterionJson>>,
    #[serde(default)]
    values: Option<Vec<Vec<serde_json::Number>>>,
    #[serde(default)]
    ahp: Option<AhpJson>,
    #[serde(default)]
    anp: Option<AnpJson>,
}

#[derive(Deserialize)]
struct CriterionJson {
    label: String,
    direction: String,
    weight: serde_json::Number,
}

/// `[row_label, column_label, value]`; the value may be a JSON number or a
/// string carrying a fraction such as "1/3".
#[derive(Deserialize)]
struct TripleJson(String, String, ValueJson);

#[derive(Deserialize)]
#[serde(untagged)]
enum ValueJson {
    Number(serde_json::Number),
    Text(String),
}

impl ValueJson {
    fn as_text(&self) -> String {
        match self {
            ValueJson::Number(n) => n.to_string(),
            ValueJson::Text(s) => s.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AhpJson {
    #[serde(default)]
    criteria_matrix: Option<Vec<TripleJson>>,
    #[serde(default)]
    alternative_matrices: Option<Vec<Vec<TripleJson>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AnpJson {
    clusters: Vec<ClusterJson>,
    #[serde(default)]
    nodes: Option<Vec<String>>,
    influence_blocks: Vec<BlockJson>,
    cluster_splits: Vec<SplitJson>,
    goal: String,
    alternatives_cluster: String,
}

#[derive(Deserialize)]
struct ClusterJson {
    label: String,
    nodes: Vec<String>,
}

#[derive(Deserialize)]
struct BlockJson {
    parent: String,
    cluster: String,
    children: Vec<String>,
    comparisons: Vec<TripleJson>,
}

#[derive(Deserialize)]
struct SplitJson {
    parent: String,
    weights: BTreeMap<String, serde_json::Number>,
}

fn parse_json(path: &str, content: &str, policy: WeightPolicy) -> CliResult<ProblemFile> {
    let file: FileJson = serde_json::from_str(content)
        .map_err(|err| CliError::parse(path, err.line(), err.to_string()))?;

    let matrix_sections = [
        file.alternatives.is_some(),
        file.criteria.is_some(),
        file.values.is_some(),
    ];
    let problem_pair = if matrix_sections.iter().all(|present| *present) {
        let alternatives = file.alternatives.unwrap();
        let criteria = file.criteria.unwrap();
        let raw_values = file.values.unwrap();
        let labels: Vec<String> = criteria.iter().map(|c| c.label.clone()).collect();
        let directions = criteria
            .iter()
            .map(|c| parse_direction(&c.direction, path, 0))
            .collect::<CliResult<Vec<_>>>()?;
        let weights = criteria
            .iter()
            .map(|c| {
                parse_pair(&c.weight.to_string()).map_err(|message| {
                    CliError::parse(path, 0, format!("weight of {}: {message}", c.label))
                })
            })
            .collect::<CliResult<Vec<_>>>()?;
        let values = raw_values
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, cell)| {
                        parse_pair(&cell.to_string()).map_err(|message| {
                            CliError::parse(
                                path,
                                0,
                                format!("values[{i}][{j}]: {message}"),
                            )
                        })
                    })
                    .collect::<CliResult<Vec<_>>>()
            })
            .collect::<CliResult<Vec<_>>>()?;
        Some(build_problems(
            path,
            alternatives,
            labels,
            directions,
            weights,
            values,
            policy,
        )?)
    } else if matrix_sections.iter().any(|present| *present) {
        return Err(CliError::parse(
            path,
            0,
            "alternatives, criteria, and values must be given together",
        ));
    } else if file.anp.is_none() {
        return Err(CliError::parse(
            path,
            0,
            "file carries neither a decision matrix nor an `anp` section",
        ));
    } else {
        None
    };

    let ahp = match file.ahp {
        Some(section) => {
            let (problem, _) = problem_pair.as_ref().ok_or_else(|| {
                CliError::parse(path, 0, "an `ahp` section needs the decision matrix")
            })?;
            Some(parse_ahp_section(path, section, problem)?)
        }
        None => None,
    };
    let anp = match file.anp {
        Some(section) => Some(parse_anp_section(path, section)?),
        None => None,
    };

    let (problem, exact) = match problem_pair {
        Some((problem, exact)) => (Some(problem), Some(exact)),
        None => (None, None),
    };
    Ok(ProblemFile {
        path: path.to_string(),
        problem,
        exact,
        ahp,
        anp,
    })
}

/// Build a pairwise matrix from label-addressed triples. Either orientation
/// of a pair is accepted; the stored judgment is canonicalized to the upper
/// triangle.
fn matrix_from_triples(
    path: &str,
    labels: &[String],
    triples: &[TripleJson],
    context: &str,
) -> CliResult<PairwiseMatrix<f64>> {
    let index_of = |label: &str| -> CliResult<usize> {
        labels.iter().position(|l| l == label).ok_or_else(|| {
            CliError::parse(path, 0, format!("{context}: unknown label {label:?}"))
        })
    };
    let mut judgments = Vec::with_capacity(triples.len());
    for TripleJson(row, col, value) in triples {
        let i = index_of(row)?;
        let j = index_of(col)?;
        let text = value.as_text();
        let exact = parse_number(&text).map_err(|message| {
            CliError::parse(path, 0, format!("{context} ({row}, {col}): {message}"))
        })?;
        let value = to_f64(&exact);
        if i < j {
            judgments.push((i, j, value));
        } else {
            judgments.push((j, i, 1.0 / value));
        }
    }
    PairwiseMatrix::from_upper_triangle(labels.to_vec(), &judgments).map_err(CliError::from)
}

fn parse_ahp_section(path: &str, section: AhpJson, problem: &Problem) -> CliResult<AhpSection> {
    let criterion_labels: Vec<String> =
        problem.criteria().iter().map(|c| c.label.clone()).collect();
    let criteria_matrix = section
        .criteria_matrix
        .map(|triples| matrix_from_triples(path, &criterion_labels, &triples, "ahp.criteria_matrix"))
        .transpose()?;
    let alternative_matrices = section
        .alternative_matrices
        .map(|lists| {
            if lists.len() != problem.criterion_count() {
                return Err(CliError::parse(
                    path,
                    0,
                    format!(
                        "ahp.alternative_matrices must hold one matrix per criterion ({} given, {} criteria)",
                        lists.len(),
                        problem.criterion_count()
                    ),
                ));
            }
            lists
                .iter()
                .enumerate()
                .map(|(j, triples)| {
                    matrix_from_triples(
                        path,
                        problem.alternatives(),
                        triples,
                        &format!("ahp.alternative_matrices[{j}]"),
                    )
                })
                .collect::<CliResult<Vec<_>>>()
        })
        .transpose()?;
    Ok(AhpSection {
        criteria_matrix,
        alternative_matrices,
    })
}

fn parse_anp_section(path: &str, section: AnpJson) -> CliResult<AnpSection> {
    let clusters: Vec<Cluster> = section
        .clusters
        .iter()
        .map(|c| Cluster {
            label: c.label.clone(),
            nodes: c.nodes.clone(),
        })
        .collect();
    let nodes = section.nodes.unwrap_or_else(|| {
        clusters
            .iter()
            .flat_map(|c| c.nodes.iter().cloned())
            .collect()
    });

    let mut influence_blocks: BTreeMap<String, Vec<InfluenceBlock<f64>>> = BTreeMap::new();
    for block in &section.influence_blocks {
        let matrix = matrix_from_triples(
            path,
            &block.children,
            &block.comparisons,
            &format!("influence of {} on {}", block.parent, block.cluster),
        )?;
        influence_blocks
            .entry(block.parent.clone())
            .or_default()
            .push(InfluenceBlock {
                target_cluster: block.cluster.clone(),
                matrix,
            });
    }

    let mut cluster_splits: BTreeMap<String, Vec<(String, f64)>> = BTreeMap::new();
    for split in &section.cluster_splits {
        let weights = split
            .weights
            .iter()
            .map(|(cluster, number)| {
                let text = number.to_string();
                parse_number(&text)
                    .map(|exact| (cluster.clone(), to_f64(&exact)))
                    .map_err(|message| {
                        CliError::parse(
                            path,
                            0,
                            format!("cluster split of {}: {message}", split.parent),
                        )
                    })
            })
            .collect::<CliResult<Vec<_>>>()?;
        if cluster_splits.insert(split.parent.clone(), weights).is_some() {
            return Err(CliError::parse(
                path,
                0,
                format!("duplicate cluster split for parent {}", split.parent),
            ));
        }
    }

    let network = AnpNetwork::new(clusters, nodes, influence_blocks, cluster_splits)
        .map_err(CliError::from)?;
    Ok(AnpSection {
        network,
        goal: section.goal,
        alternatives_cluster: section.alternatives_cluster,
    })
}
