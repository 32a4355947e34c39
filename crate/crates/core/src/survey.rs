//! Batch analysis of a corpus and report output.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::p_part;
use crate::corpus::GroupRecord;
use crate::error::{Error, Result};
use crate::group::{PermGroup, DEFAULT_CAP};
use crate::rationality::{group_rationality, run_checks, Check, CheckResult, CheckStatus, Witness};
use crate::structure::sylow;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyConfig {
    pub cap: usize,
    pub checks: Vec<Check>,
    /// Worker threads; 0 lets the thread pool decide. Never affects the output.
    #[serde(skip)]
    pub workers: usize,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            checks: Check::ALL.to_vec(),
            workers: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub id: String,
    pub name: Option<String>,
    pub degree: usize,
    pub order: u64,
    pub exponent: u64,
    pub class_count: usize,
    pub solvable: bool,
    pub rational: bool,
    pub cut: bool,
    pub semirational: bool,
    pub qg_degree: u64,
    /// Whether a Sylow 2-subgroup is cut; only computed for cut groups.
    pub sylow2_cut: Option<bool>,
    pub check_results: BTreeMap<String, CheckResult>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatusCounts {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Aggregates {
    pub total: usize,
    pub analyzed: usize,
    pub skipped: usize,
    pub max_order: u64,
    pub solvable_count: usize,
    pub rational_count: usize,
    pub cut_count: usize,
    pub semirational_count: usize,
    pub rational_pct: f64,
    pub cut_pct: f64,
    pub semirational_pct: f64,
    pub checks: BTreeMap<String, StatusCounts>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub id: String,
    pub check: String,
    pub detail: String,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skipped {
    pub id: String,
    pub reason: String,
}

/// Informational observations that are not check failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub id: String,
    pub kind: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurveyReport {
    pub corpus: String,
    pub config: SurveyConfig,
    pub rows: Vec<SurveyRow>,
    pub aggregates: Aggregates,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Skipped>,
    pub findings: Vec<Finding>,
}

impl SurveyReport {
    pub fn has_failures(&self) -> bool {
        !self.failures.is_empty()
    }

    pub fn row(&self, id: &str) -> Option<&SurveyRow> {
        self.rows.iter().find(|r| r.id == id)
    }
}

pub const NONCUT_SYLOW2: &str = "cut group with non-cut Sylow 2-subgroup";

fn analyze_record(rec: &GroupRecord, config: &SurveyConfig) -> Result<SurveyRow> {
    let group: PermGroup = rec.group()?;
    let report = group_rationality(&group, config.cap)?;
    let check_results = run_checks(&group, &report, &config.checks, config.cap)?;
    let sylow2_cut = if report.is_cut {
        let p = sylow(&group, 2, config.cap)?;
        Some(group_rationality(p.as_group(), config.cap)?.is_cut)
    } else {
        None
    };
    Ok(SurveyRow {
        id: rec.id.clone(),
        name: rec.name.clone(),
        degree: rec.degree,
        order: report.order,
        exponent: report.exponent,
        class_count: report.class_reports.len(),
        solvable: report.solvable,
        rational: report.is_rational,
        cut: report.is_cut,
        semirational: report.is_semirational,
        qg_degree: report.qg_degree,
        sylow2_cut,
        check_results,
    })
}

fn pct(count: usize, of: usize) -> f64 {
    if of == 0 {
        0.0
    } else {
        100.0 * count as f64 / of as f64
    }
}

/// Analyzes every record; per-record errors become `skipped` entries.
///
/// Rows, failures and skips are ordered by id whatever the worker count.
pub fn run_survey(records: &[GroupRecord], config: &SurveyConfig, corpus: &str) -> SurveyReport {
    use rayon::prelude::*;

    let analyze = || -> Vec<(String, Result<SurveyRow>)> {
        records
            .par_iter()
            .map(|rec| (rec.id.clone(), analyze_record(rec, config)))
            .collect()
    };
    let mut outcomes = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
    {
        Ok(pool) => pool.install(analyze),
        Err(_) => analyze(),
    };
    outcomes.sort_by(|a, b| a.0.cmp(&b.0));

    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for (id, outcome) in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err(e) => skipped.push(Skipped {
                id,
                reason: e.to_string(),
            }),
        }
    }

    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut check_counts: BTreeMap<String, StatusCounts> = config
        .checks
        .iter()
        .map(|c| (c.name().to_string(), StatusCounts::default()))
        .collect();
    for row in &rows {
        for (name, result) in &row.check_results {
            let counts = check_counts.entry(name.clone()).or_default();
            match result.status {
                CheckStatus::Pass => counts.pass += 1,
                CheckStatus::Skip => counts.skip += 1,
                CheckStatus::Fail => {
                    counts.fail += 1;
                    failures.push(Failure {
                        id: row.id.clone(),
                        check: name.clone(),
                        detail: result.detail.clone(),
                        witness: result.witness.clone(),
                    });
                }
            }
        }
        if row.sylow2_cut == Some(false) {
            findings.push(Finding {
                id: row.id.clone(),
                kind: NONCUT_SYLOW2.to_string(),
                detail: format!(
                    "|G| = {}, Sylow 2-subgroup of order {}",
                    row.order,
                    p_part(row.order, 2)
                ),
            });
        }
    }

    let analyzed = rows.len();
    let count = |f: fn(&SurveyRow) -> bool| rows.iter().filter(|r| f(r)).count();
    let rational_count = count(|r| r.rational);
    let cut_count = count(|r| r.cut);
    let semirational_count = count(|r| r.semirational);
    let aggregates = Aggregates {
        total: records.len(),
        analyzed,
        skipped: skipped.len(),
        max_order: rows.iter().map(|r| r.order).max().unwrap_or(0),
        solvable_count: count(|r| r.solvable),
        rational_count,
        cut_count,
        semirational_count,
        rational_pct: pct(rational_count, analyzed),
        cut_pct: pct(cut_count, analyzed),
        semirational_pct: pct(semirational_count, analyzed),
        checks: check_counts,
    };

    SurveyReport {
        corpus: corpus.to_string(),
        config: config.clone(),
        rows,
        aggregates,
        failures,
        skipped,
        findings,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Text,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            "text" => Ok(Self::Text),
            other => Err(Error::BadParam(format!("unknown format {other:?}"))),
        }
    }
}

pub fn report_json(report: &SurveyReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report)?;
    s.push('\n');
    Ok(s)
}

pub fn report_csv(report: &SurveyReport) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let checks: Vec<&str> = report.config.checks.iter().map(|c| c.name()).collect();
    let mut header = vec![
        "id",
        "order",
        "degree",
        "solvable",
        "rational",
        "cut",
        "semirational",
        "qg_degree",
    ];
    header.extend(&checks);
    w.write_record(&header)?;
    for row in &report.rows {
        let mut fields = vec![
            row.id.clone(),
            row.order.to_string(),
            row.degree.to_string(),
            row.solvable.to_string(),
            row.rational.to_string(),
            row.cut.to_string(),
            row.semirational.to_string(),
            row.qg_degree.to_string(),
        ];
        for c in &checks {
            fields.push(
                row.check_results
                    .get(*c)
                    .map(|r| r.status.to_string())
                    .unwrap_or_default(),
            );
        }
        w.write_record(&fields)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn report_text(report: &SurveyReport) -> String {
    let mut out = String::new();
    let a = &report.aggregates;
    writeln!(out, "corpus: {}", report.corpus).unwrap();
    writeln!(out, "cap: {}", report.config.cap).unwrap();
    writeln!(out).unwrap();
    writeln!(
        out,
        "{:<28} {:>9} {:>4} {:>4} {:>4} {:>4} {:>6}",
        "id", "order", "solv", "rat", "cut", "semi", "|Q(G)|"
    )
    .unwrap();
    let yn = |b: bool| if b { "y" } else { "-" };
    for r in &report.rows {
        writeln!(
            out,
            "{:<28} {:>9} {:>4} {:>4} {:>4} {:>4} {:>6}",
            r.id,
            r.order,
            yn(r.solvable),
            yn(r.rational),
            yn(r.cut),
            yn(r.semirational),
            r.qg_degree
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    writeln!(
        out,
        "groups analyzed: {} of {} (largest order {}), skipped: {}",
        a.analyzed, a.total, a.max_order, a.skipped
    )
    .unwrap();
    writeln!(out, "{:<14} {:>6} {:>8}", "property", "count", "percent").unwrap();
    for (label, count, pct) in [
        ("rational", a.rational_count, a.rational_pct),
        ("cut", a.cut_count, a.cut_pct),
        ("semi-rational", a.semirational_count, a.semirational_pct),
    ] {
        writeln!(out, "{label:<14} {count:>6} {pct:>7.2}%").unwrap();
    }
    writeln!(out).unwrap();
    writeln!(out, "{:<12} {:>6} {:>6} {:>6}", "check", "pass", "fail", "skip").unwrap();
    for (name, c) in &a.checks {
        writeln!(out, "{name:<12} {:>6} {:>6} {:>6}", c.pass, c.fail, c.skip).unwrap();
    }
    if !report.failures.is_empty() {
        writeln!(out, "\nFAILURES").unwrap();
        for f in &report.failures {
            writeln!(out, "  {} [{}]: {}", f.id, f.check, f.detail).unwrap();
            if let Some(w) = &f.witness {
                writeln!(
                    out,
                    "    {} on {} points: {}",
                    w.description,
                    w.degree,
                    w.generators.join(", ")
                )
                .unwrap();
            }
        }
    }
    if !report.findings.is_empty() {
        writeln!(out, "\nfindings").unwrap();
        for f in &report.findings {
            writeln!(out, "  {}: {} ({})", f.id, f.kind, f.detail).unwrap();
        }
    }
    if !report.skipped.is_empty() {
        writeln!(out, "\nskipped").unwrap();
        for s in &report.skipped {
            writeln!(out, "  {}: {}", s.id, s.reason).unwrap();
        }
    }
    out
}

pub fn render_report(report: &SurveyReport, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => report_json(report),
        ReportFormat::Csv => report_csv(report),
        ReportFormat::Text => Ok(report_text(report)),
    }
}

/// Writes the report to `path`, or to standard output when `path` is `None`.
pub fn emit_report(report: &SurveyReport, format: ReportFormat, path: Option<&Path>) -> Result<()> {
    let body = render_report(report, format)?;
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => std::io::stdout().lock().write_all(body.as_bytes())?,
    }
    Ok(())
}
