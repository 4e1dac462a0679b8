//! Command dispatch: rank, compare, ahp, anp, waspas-sweep.

use serde::Serialize;

use mcdm_core::ahp::{ahp_criteria_weights, ahp_evaluate, AhpModel, AlternativeInput, CriteriaInput};
use mcdm_core::anp::anp_evaluate;
use mcdm_core::methods_ratio::{copras, fuca, moora};
use mcdm_core::methods_simple::{mew, saw, waspas, waspas_sweep, DEFAULT_LAMBDA};
use mcdm_core::pairwise::ConsistencyPolicy;
use mcdm_core::{
    BigRational, Error, ExactProblem, Method, Problem, RankingResult,
};

use crate::decimal::{from_f64_exact, to_f64};
use crate::error::{CliError, CliResult};
use crate::input::ProblemFile;
use crate::report::{
    fmt_rank, fmt_score, ranking_notation, render_csv, render_json, render_table, ConsistencyEcho,
    Format, ProblemEcho, RankingEcho,
};

fn parse_acm_method(name: &str) -> CliResult<Method> {
    let method: Method = name
        .parse()
        .map_err(|err: Error| CliError::Usage(err.to_string()))?;
    if !Method::acm_methods().contains(&method) {
        return Err(CliError::Usage(format!(
            "unknown method: {name} (expected one of saw, mew, copras, moora, fuca, waspas)"
        )));
    }
    Ok(method)
}

fn exact_to_f64_ranking(result: RankingResult<BigRational>) -> RankingResult<f64> {
    RankingResult {
        method: result.method,
        scores: result.scores.iter().map(to_f64).collect(),
        ranks: result.ranks.iter().map(to_f64).collect(),
        ordering: result.ordering,
        diagnostics: result
            .diagnostics
            .iter()
            .map(|(k, v)| (k.clone(), to_f64(v)))
            .collect(),
    }
}

/// Evaluate one matrix method. FUCA runs on the exact-decimal view of the
/// problem so genuinely equal weighted rank sums tie instead of drifting
/// apart in the last binary digit.
fn run_method(
    problem: &Problem,
    exact: &ExactProblem,
    method: Method,
    lambda: f64,
) -> CliResult<RankingResult<f64>> {
    Ok(match method {
        Method::Saw => saw(problem),
        Method::Mew => mew(problem),
        Method::Copras => copras(problem),
        Method::Moora => moora(problem),
        Method::Fuca => exact_to_f64_ranking(fuca(exact)),
        Method::Waspas => waspas(problem, lambda)?,
        Method::Ahp | Method::Anp => {
            return Err(CliError::Usage(format!(
                "{} is not a matrix method; use the dedicated subcommand",
                method.name()
            )))
        }
    })
}

fn ranking_rows(labels: &[String], result: &RankingResult<f64>) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "alternative".to_string(),
        "score".to_string(),
        "rank".to_string(),
    ]];
    for (i, label) in labels.iter().enumerate() {
        rows.push(vec![
            label.clone(),
            fmt_score(result.scores[i]),
            fmt_rank(result.ranks[i]),
        ]);
    }
    rows
}

// ---------------------------------------------------------------------------
// rank
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct RankReport {
    command: &'static str,
    problem: ProblemEcho,
    #[serde(flatten)]
    result: RankingEcho,
}

pub fn cmd_rank(
    file: &ProblemFile,
    method_name: &str,
    lambda: Option<f64>,
    format: Format,
) -> CliResult<String> {
    let method = parse_acm_method(method_name)?;
    let (problem, exact) = file.require_problem()?;
    let result = run_method(problem, exact, method, lambda.unwrap_or(DEFAULT_LAMBDA))?;
    let labels = problem.alternatives();
    let echo = RankingEcho::new(labels, &result);
    match format {
        Format::Json => Ok(render_json(&RankReport {
            command: "rank",
            problem: ProblemEcho::from_problem(problem),
            result: echo,
        })),
        Format::Csv => Ok(render_csv(
            &["alternative".into(), "score".into(), "rank".into()],
            &labels
                .iter()
                .enumerate()
                .map(|(i, label)| {
                    vec![
                        label.clone(),
                        format!("{}", result.scores[i]),
                        format!("{}", result.ranks[i]),
                    ]
                })
                .collect::<Vec<_>>(),
        )),
        Format::Table => {
            let mut out = format!("method: {}\n", method.name());
            for (key, value) in &result.diagnostics {
                out.push_str(&format!("{key}: {value}\n"));
            }
            out.push('\n');
            out.push_str(&render_table(&ranking_rows(labels, &result)));
            out.push_str(&format!("\nranking: {}\n", echo.ranking));
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// compare
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct CompareReport {
    command: &'static str,
    problem: ProblemEcho,
    methods: Vec<String>,
    results: Vec<RankingEcho>,
    top: Vec<TopEcho>,
}

#[derive(Serialize)]
struct TopEcho {
    method: String,
    alternative: String,
}

fn top_alternatives(labels: &[String], result: &RankingResult<f64>) -> String {
    let best = result.ranks.iter().copied().fold(f64::INFINITY, f64::min);
    labels
        .iter()
        .zip(&result.ranks)
        .filter(|(_, rank)| **rank == best)
        .map(|(label, _)| label.clone())
        .collect::<Vec<_>>()
        .join(" = ")
}

pub fn cmd_compare(
    file: &ProblemFile,
    method_names: &[String],
    lambda: Option<f64>,
    format: Format,
) -> CliResult<String> {
    let methods: Vec<Method> = if method_names.is_empty() {
        Method::acm_methods().to_vec()
    } else {
        let mut parsed = Vec::new();
        for name in method_names {
            let method = parse_acm_method(name)?;
            // duplicated selections collapse to one column
            if !parsed.contains(&method) {
                parsed.push(method);
            }
        }
        parsed
    };
    if methods.len() < 2 {
        return Err(CliError::Usage(
            "compare needs at least two distinct methods".into(),
        ));
    }
    let (problem, exact) = file.require_problem()?;
    let labels = problem.alternatives();
    let results: Vec<RankingResult<f64>> = methods
        .iter()
        .map(|method| run_method(problem, exact, *method, lambda.unwrap_or(DEFAULT_LAMBDA)))
        .collect::<CliResult<_>>()?;

    let top: Vec<TopEcho> = methods
        .iter()
        .zip(&results)
        .map(|(method, result)| TopEcho {
            method: method.name().to_string(),
            alternative: top_alternatives(labels, result),
        })
        .collect();

    match format {
        Format::Json => Ok(render_json(&CompareReport {
            command: "compare",
            problem: ProblemEcho::from_problem(problem),
            methods: methods.iter().map(|m| m.name().to_string()).collect(),
            results: results
                .iter()
                .map(|result| RankingEcho::new(labels, result))
                .collect(),
            top,
        })),
        Format::Csv => {
            let mut header = vec!["alternative".to_string()];
            header.extend(methods.iter().map(|m| m.name().to_string()));
            let mut rows = Vec::new();
            for (i, label) in labels.iter().enumerate() {
                let mut row = vec![label.clone()];
                row.extend(results.iter().map(|r| format!("{}", r.ranks[i])));
                rows.push(row);
            }
            Ok(render_csv(&header, &rows))
        }
        Format::Table => {
            let mut rows = Vec::new();
            let mut header = vec!["alternative".to_string()];
            header.extend(methods.iter().map(|m| m.name().to_string()));
            rows.push(header);
            for (i, label) in labels.iter().enumerate() {
                let mut row = vec![label.clone()];
                row.extend(results.iter().map(|r| fmt_rank(r.ranks[i])));
                rows.push(row);
            }
            let mut top_row = vec!["top".to_string()];
            top_row.extend(top.iter().map(|t| t.alternative.clone()));
            rows.push(top_row);
            let mut out = String::from("rank of each alternative by method\n\n");
            out.push_str(&render_table(&rows));
            out.push('\n');
            for entry in &top {
                out.push_str(&format!(
                    "{}: {} top-ranked\n",
                    entry.method, entry.alternative
                ));
            }
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// ahp
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct AhpReport {
    command: &'static str,
    problem: ProblemEcho,
    criteria: Vec<String>,
    weights: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    criteria_consistency: Option<ConsistencyEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    local_priorities: Option<Vec<Vec<f64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    local_consistency: Option<Vec<ConsistencyEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    global: Option<RankingEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hybrid: Option<RankingEcho>,
}

pub fn cmd_ahp(
    file: &ProblemFile,
    weights_only: bool,
    hybrid: Option<&str>,
    strict: bool,
    format: Format,
) -> CliResult<String> {
    let policy = if strict {
        ConsistencyPolicy::Strict
    } else {
        ConsistencyPolicy::Warn
    };
    let (problem, exact) = file.require_problem()?;
    let criteria_labels: Vec<String> = problem.criteria().iter().map(|c| c.label.clone()).collect();
    let section = file.ahp.as_ref();

    let criteria_input = match section.and_then(|s| s.criteria_matrix.clone()) {
        Some(matrix) => CriteriaInput::Matrix(matrix),
        // no pairwise section: the file's weight row is the explicit vector
        None => CriteriaInput::Weights(problem.weights()),
    };
    let alternatives_input = match section.and_then(|s| s.alternative_matrices.clone()) {
        Some(matrices) => AlternativeInput::Matrices(matrices),
        None => AlternativeInput::DeriveFromProblem,
    };

    let (weights, criteria_report) = match &criteria_input {
        CriteriaInput::Matrix(matrix) => {
            let (weights, report) = ahp_criteria_weights(matrix, policy)?;
            warn_if_unacceptable(policy, report.cr, "criteria comparison matrix");
            (weights, Some(report))
        }
        CriteriaInput::Weights(weights) => (weights.clone(), None),
    };

    let mut report = AhpReport {
        command: "ahp",
        problem: ProblemEcho::from_problem(problem),
        criteria: criteria_labels.clone(),
        weights: weights.clone(),
        criteria_consistency: criteria_report.as_ref().map(ConsistencyEcho::new),
        local_priorities: None,
        local_consistency: None,
        global: None,
        hybrid: None,
    };

    if let Some(backend) = hybrid {
        let method = parse_acm_method(backend)?;
        let reweighted = problem.with_weights(&weights)?;
        let exact_weights: Vec<BigRational> = weights.iter().map(|w| from_f64_exact(*w)).collect();
        let reweighted_exact = exact.with_weights(&exact_weights)?;
        let result = run_method(&reweighted, &reweighted_exact, method, DEFAULT_LAMBDA)?;
        report.hybrid = Some(RankingEcho::new(problem.alternatives(), &result));
    } else if !weights_only {
        let model = AhpModel {
            criteria: criteria_input,
            alternatives: alternatives_input,
        };
        let outcome = ahp_evaluate(&model, Some(problem), policy)?;
        for (j, block) in outcome.local.reports.iter().enumerate() {
            warn_if_unacceptable(
                policy,
                block.cr,
                &format!("alternatives under {}", criteria_labels[j]),
            );
        }
        report.local_priorities = Some(outcome.local.matrix.clone());
        report.local_consistency = Some(
            outcome
                .local
                .reports
                .iter()
                .map(ConsistencyEcho::new)
                .collect(),
        );
        report.global = Some(RankingEcho::new(problem.alternatives(), &outcome.ranking));
    }

    match format {
        Format::Json => Ok(render_json(&report)),
        Format::Csv => {
            if let Some(result) = report.global.as_ref().or(report.hybrid.as_ref()) {
                let rows = problem
                    .alternatives()
                    .iter()
                    .enumerate()
                    .map(|(i, label)| {
                        vec![
                            label.clone(),
                            format!("{}", result.scores[i]),
                            format!("{}", result.ranks[i]),
                        ]
                    })
                    .collect::<Vec<_>>();
                Ok(render_csv(
                    &["alternative".into(), "score".into(), "rank".into()],
                    &rows,
                ))
            } else {
                let rows = criteria_labels
                    .iter()
                    .zip(&weights)
                    .map(|(label, weight)| vec![label.clone(), format!("{weight}")])
                    .collect::<Vec<_>>();
                Ok(render_csv(&["criterion".into(), "weight".into()], &rows))
            }
        }
        Format::Table => Ok(render_ahp_table(problem, &report)),
    }
}

fn render_ahp_table(problem: &Problem, report: &AhpReport) -> String {
    let mut out = String::new();
    out.push_str("criteria weights\n\n");
    let mut rows = vec![vec!["criterion".to_string(), "weight".to_string()]];
    for (label, weight) in report.criteria.iter().zip(&report.weights) {
        rows.push(vec![label.clone(), fmt_score(*weight)]);
    }
    out.push_str(&render_table(&rows));
    if let Some(consistency) = &report.criteria_consistency {
        out.push_str(&format!(
            "\nlambda_max = {:.4}, CI = {:.4}, CR = {:.4} ({})\n",
            consistency.lambda_max,
            consistency.ci,
            consistency.cr,
            acceptable_text(consistency.acceptable)
        ));
    }
    if let (Some(local), Some(local_consistency)) =
        (&report.local_priorities, &report.local_consistency)
    {
        out.push_str("\nlocal priorities\n\n");
        let mut rows = vec![std::iter::once("alternative".to_string())
            .chain(report.criteria.iter().cloned())
            .collect::<Vec<_>>()];
        for (i, label) in problem.alternatives().iter().enumerate() {
            let mut row = vec![label.clone()];
            row.extend(local[i].iter().map(|v| fmt_score(*v)));
            rows.push(row);
        }
        out.push_str(&render_table(&rows));
        out.push('\n');
        for (label, consistency) in report.criteria.iter().zip(local_consistency) {
            out.push_str(&format!(
                "CR under {label}: {:.4} ({})\n",
                consistency.cr,
                acceptable_text(consistency.acceptable)
            ));
        }
    }
    if let Some(global) = &report.global {
        out.push_str("\nglobal priorities\n\n");
        let mut rows = vec![vec![
            "alternative".to_string(),
            "score".to_string(),
            "rank".to_string(),
        ]];
        for (i, label) in problem.alternatives().iter().enumerate() {
            rows.push(vec![
                label.clone(),
                fmt_score(global.scores[i]),
                fmt_rank(global.ranks[i]),
            ]);
        }
        out.push_str(&render_table(&rows));
        out.push_str(&format!("\nranking: {}\n", global.ranking));
    }
    if let Some(hybrid) = &report.hybrid {
        out.push_str(&format!("\nhybrid backend: {}\n\n", hybrid.method));
        let mut rows = vec![vec![
            "alternative".to_string(),
            "score".to_string(),
            "rank".to_string(),
        ]];
        for (i, label) in problem.alternatives().iter().enumerate() {
            rows.push(vec![
                label.clone(),
                fmt_score(hybrid.scores[i]),
                fmt_rank(hybrid.ranks[i]),
            ]);
        }
        out.push_str(&render_table(&rows));
        out.push_str(&format!("\nranking: {}\n", hybrid.ranking));
    }
    out
}

fn acceptable_text(acceptable: bool) -> &'static str {
    if acceptable {
        "acceptable"
    } else {
        "exceeds 0.1"
    }
}

fn warn_if_unacceptable(policy: ConsistencyPolicy, cr: f64, context: &str) {
    if policy == ConsistencyPolicy::Warn && cr > 0.1 {
        eprintln!("warning: consistency ratio of {context} is {cr:.4} (> 0.1); judgments should be revised");
    }
}

// ---------------------------------------------------------------------------
// anp
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct AnpReport {
    command: &'static str,
    nodes: Vec<String>,
    weighted_supermatrix: Vec<Vec<f64>>,
    limit_supermatrix: Vec<Vec<f64>>,
    block_consistency: Vec<BlockEcho>,
    alternatives: Vec<String>,
    #[serde(flatten)]
    priorities: RankingEcho,
}

#[derive(Serialize)]
struct BlockEcho {
    parent: String,
    cluster: String,
    cr: f64,
    acceptable: bool,
}

pub fn cmd_anp(file: &ProblemFile, strict: bool, format: Format) -> CliResult<String> {
    let policy = if strict {
        ConsistencyPolicy::Strict
    } else {
        ConsistencyPolicy::Warn
    };
    let section = file.require_anp()?;
    let outcome = anp_evaluate(
        &section.network,
        &section.goal,
        &section.alternatives_cluster,
        policy,
    )?;
    for block in &outcome.block_reports {
        warn_if_unacceptable(
            policy,
            block.report.cr,
            &format!("influence of {} on {}", block.parent, block.target_cluster),
        );
    }
    let nodes = section.network.nodes().to_vec();
    let report = AnpReport {
        command: "anp",
        nodes: nodes.clone(),
        weighted_supermatrix: outcome.weighted.matrix.rows(),
        limit_supermatrix: outcome.limit.matrix.rows(),
        block_consistency: outcome
            .block_reports
            .iter()
            .map(|block| BlockEcho {
                parent: block.parent.clone(),
                cluster: block.target_cluster.clone(),
                cr: block.report.cr,
                acceptable: block.report.acceptable,
            })
            .collect(),
        alternatives: outcome.alternative_labels.clone(),
        priorities: RankingEcho::new(&outcome.alternative_labels, &outcome.ranking),
    };

    match format {
        Format::Json => Ok(render_json(&report)),
        Format::Csv => {
            let rows = report
                .alternatives
                .iter()
                .enumerate()
                .map(|(i, label)| {
                    vec![
                        label.clone(),
                        format!("{}", report.priorities.scores[i]),
                        format!("{}", report.priorities.ranks[i]),
                    ]
                })
                .collect::<Vec<_>>();
            Ok(render_csv(
                &["alternative".into(), "score".into(), "rank".into()],
                &rows,
            ))
        }
        Format::Table => {
            let mut out = String::new();
            out.push_str("weighted supermatrix\n\n");
            out.push_str(&matrix_table(&nodes, &report.weighted_supermatrix));
            out.push_str("\nlimit supermatrix\n\n");
            out.push_str(&matrix_table(&nodes, &report.limit_supermatrix));
            out.push_str("\nblock consistency\n\n");
            let mut rows = vec![vec![
                "parent".to_string(),
                "cluster".to_string(),
                "CR".to_string(),
            ]];
            for block in &report.block_consistency {
                rows.push(vec![
                    block.parent.clone(),
                    block.cluster.clone(),
                    format!("{:.4} ({})", block.cr, acceptable_text(block.acceptable)),
                ]);
            }
            out.push_str(&render_table(&rows));
            out.push_str("\nalternative priorities (goal column, normalized)\n\n");
            let mut rows = vec![vec![
                "alternative".to_string(),
                "score".to_string(),
                "rank".to_string(),
            ]];
            for (i, label) in report.alternatives.iter().enumerate() {
                rows.push(vec![
                    label.clone(),
                    fmt_score(report.priorities.scores[i]),
                    fmt_rank(report.priorities.ranks[i]),
                ]);
            }
            out.push_str(&render_table(&rows));
            out.push_str(&format!("\nranking: {}\n", report.priorities.ranking));
            Ok(out)
        }
    }
}

fn matrix_table(nodes: &[String], rows: &[Vec<f64>]) -> String {
    let mut table = vec![std::iter::once(String::new())
        .chain(nodes.iter().cloned())
        .collect::<Vec<_>>()];
    for (node, row) in nodes.iter().zip(rows) {
        let mut line = vec![node.clone()];
        line.extend(row.iter().map(|v| fmt_score(*v)));
        table.push(line);
    }
    render_table(&table)
}

// ---------------------------------------------------------------------------
// waspas-sweep
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SweepReport {
    command: &'static str,
    problem: ProblemEcho,
    results: Vec<SweepRow>,
    rank_changes: Vec<String>,
    ranking_stable: bool,
}

#[derive(Serialize)]
struct SweepRow {
    lambda: f64,
    scores: Vec<f64>,
    ranks: Vec<f64>,
    ranking: String,
}

/// Parse an `A:B:STEP` grid into the lambda list it denotes.
fn parse_grid(spec: &str) -> CliResult<Vec<f64>> {
    let bad_grid = |message: String| CliError::parse("--grid", 0, message);
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(bad_grid(format!("grid must be A:B:STEP, got {spec:?}")));
    }
    let numbers: Vec<f64> = parts
        .iter()
        .map(|part| {
            part.trim()
                .parse::<f64>()
                .map_err(|_| bad_grid(format!("grid element {part:?} is not a number")))
        })
        .collect::<CliResult<_>>()?;
    let (start, stop, step) = (numbers[0], numbers[1], numbers[2]);
    if step.is_nan() || step <= 0.0 {
        return Err(bad_grid(format!("grid step must be positive, got {step}")));
    }
    for bound in [start, stop] {
        if !(0.0..=1.0).contains(&bound) {
            return Err(CliError::Validation(Error::LambdaOutOfRange(bound)));
        }
    }
    if stop < start {
        return Err(bad_grid(format!("grid start {start} exceeds stop {stop}")));
    }
    let mut lambdas = Vec::new();
    let mut k = 0u32;
    loop {
        let mut lambda = start + f64::from(k) * step;
        // snap accumulated rounding back onto the grid
        if step >= 1e-6 {
            lambda = (lambda * 1e9).round() / 1e9;
        }
        if lambda > stop + 1e-9 {
            break;
        }
        lambdas.push(lambda.min(1.0));
        k += 1;
    }
    Ok(lambdas)
}

fn fmt_lambda(value: f64) -> String {
    let mut text = format!("{value:.6}");
    while text.ends_with('0') {
        text.pop();
    }
    if text.ends_with('.') {
        text.push('0');
    }
    text
}

pub fn cmd_waspas_sweep(
    file: &ProblemFile,
    grid: Option<&str>,
    format: Format,
) -> CliResult<String> {
    let lambdas = parse_grid(grid.unwrap_or("0:1:0.1"))?;
    let (problem, _) = file.require_problem()?;
    let labels = problem.alternatives();
    let results = waspas_sweep(problem, &lambdas)?;

    let rows: Vec<SweepRow> = lambdas
        .iter()
        .zip(&results)
        .map(|(lambda, result)| SweepRow {
            lambda: *lambda,
            scores: result.scores.clone(),
            ranks: result.ranks.clone(),
            ranking: ranking_notation(labels, &result.ranks),
        })
        .collect();
    let mut rank_changes = Vec::new();
    for window in rows.windows(2) {
        if window[0].ranks != window[1].ranks {
            rank_changes.push(format!(
                "ranking changes between lambda={} and lambda={}: {} -> {}",
                fmt_lambda(window[0].lambda),
                fmt_lambda(window[1].lambda),
                window[0].ranking,
                window[1].ranking
            ));
        }
    }
    let report = SweepReport {
        command: "waspas-sweep",
        problem: ProblemEcho::from_problem(problem),
        results: rows,
        rank_changes: rank_changes.clone(),
        ranking_stable: rank_changes.is_empty(),
    };

    match format {
        Format::Json => Ok(render_json(&report)),
        Format::Csv => {
            let mut header = vec!["lambda".to_string()];
            header.extend(labels.iter().cloned());
            let rows = report
                .results
                .iter()
                .map(|row| {
                    let mut line = vec![format!("{}", row.lambda)];
                    line.extend(row.scores.iter().map(|s| format!("{s}")));
                    line
                })
                .collect::<Vec<_>>();
            Ok(render_csv(&header, &rows))
        }
        Format::Table => {
            let mut table = Vec::new();
            let mut header = vec!["lambda".to_string()];
            header.extend(labels.iter().cloned());
            header.push("ranking".to_string());
            table.push(header);
            for row in &report.results {
                let mut line = vec![fmt_lambda(row.lambda)];
                for (score, rank) in row.scores.iter().zip(&row.ranks) {
                    line.push(format!("{} ({})", fmt_score(*score), fmt_rank(*rank)));
                }
                line.push(row.ranking.clone());
                table.push(line);
            }
            let mut out = render_table(&table);
            out.push('\n');
            if report.ranking_stable {
                out.push_str("ranking stable across the grid\n");
            } else {
                for change in &report.rank_changes {
                    out.push_str(change);
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}
