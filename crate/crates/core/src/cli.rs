//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a check FAILed (a potential counterexample),
//! 2 input error, 3 enumeration cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructions::FamilySpec;
use crate::corpus::{parse_corpus, write_corpus, GroupRecord};
use crate::error::Error;
use crate::group::{PermGroup, DEFAULT_CAP};
use crate::rationality::{alternating_field, group_rationality, run_checks, Check, GroupReport};
use crate::survey::{render_report, run_survey, ReportFormat, SurveyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL_FOUND: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cutgroups", version, about = "Rationality and cut-group analysis of permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one group (or every group in a corpus file).
    Analyze(AnalyzeArgs),
    /// Run the rationality analysis and checks over a corpus.
    Survey(SurveyArgs),
    /// Write a single-record corpus file for a constructed group.
    Construct(ConstructArgs),
    /// Tabulate |Q(A_n):Q| from cycle types.
    AnFields(AnFieldsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
            Format::Text => ReportFormat::Text,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    /// Largest group order that will be enumerated.
    #[arg(long, default_value_t = DEFAULT_CAP, value_parser = parse_cap)]
    pub cap: usize,
    /// Comma-separated check names (default: all).
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    pub checks: Option<Vec<Check>>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file (default: standard output).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "source")]
pub struct Source {
    /// Family spec such as `dihedral:12` or `wreath-sylnorm:3:2`.
    #[arg(long)]
    pub family: Option<String>,
    /// Corpus file; every record in it is analyzed.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SurveyArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    #[command(flatten)]
    pub common: Common,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub workers: usize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnFieldsArgs {
    #[arg(long)]
    pub max_n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

struct Failed {
    code: i32,
    message: String,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn write_output(out: &mut dyn Write, path: Option<&PathBuf>, body: &str) -> Result<(), Failed> {
    match path {
        Some(p) => std::fs::write(p, body).map_err(|e| Error::Io(e).into()),
        None => out.write_all(body.as_bytes()).map_err(|e| Error::Io(e).into()),
    }
}

#[derive(Serialize)]
struct Analyzed {
    id: String,
    report: GroupReport,
}

fn group_report_text(id: &str, r: &GroupReport) -> String {
    let mut s = format!(
        "{id}: order {}, exponent {}, solvable {}, rational {}, cut {}, semi-rational {}, |Q(G):Q| = {}\n",
        r.order, r.exponent, r.solvable, r.is_rational, r.is_cut, r.is_semirational, r.qg_degree
    );
    s.push_str("  class  size  order  |field|  real  rat  cut  semi\n");
    for c in &r.class_reports {
        s.push_str(&format!(
            "  {:>5} {:>5} {:>6} {:>8} {:>5} {:>4} {:>4} {:>5}\n",
            c.class_index,
            c.class_size,
            c.element_order,
            c.field_degree,
            c.is_real,
            c.is_rational,
            c.is_inverse_semirational,
            c.is_semirational
        ));
    }
    for (name, res) in &r.check_results {
        s.push_str(&format!("  {name:<11} {} {}\n", res.status, res.detail));
    }
    s
}

fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, Failed> {
    let c = &args.common;
    let groups: Vec<(String, PermGroup)> = match (&args.source.family, &args.source.file) {
        (Some(spec), None) => {
            let g = spec.parse::<FamilySpec>()?.build()?;
            vec![(spec.trim().to_string(), g)]
        }
        (None, Some(path)) => parse_corpus(path)?
            .iter()
            .map(|rec| Ok((rec.id.clone(), rec.group()?)))
            .collect::<Result<_, Error>>()?,
        _ => unreachable!("clap enforces exactly one source"),
    };
    let checks = c.checks.clone().unwrap_or_else(|| Check::ALL.to_vec());
    let mut analyzed = Vec::new();
    for (id, g) in groups {
        let mut report = group_rationality(&g, c.cap)?;
        report.check_results = run_checks(&g, &report, &checks, c.cap)?;
        analyzed.push(Analyzed { id, report });
    }
    let any_fail = analyzed
        .iter()
        .any(|a| a.report.check_results.values().any(|r| r.is_fail()));
    let body = match c.format {
        Format::Json => {
            let mut s = if args.source.family.is_some() {
                serde_json::to_string_pretty(&analyzed[0].report)
            } else {
                serde_json::to_string_pretty(&analyzed)
            }
            .map_err(Error::from)?;
            s.push('\n');
            s
        }
        Format::Text => analyzed
            .iter()
            .map(|a| group_report_text(&a.id, &a.report))
            .collect(),
        Format::Csv => {
            let mut s = String::from("id,order,solvable,rational,cut,semirational,qg_degree\n");
            for a in &analyzed {
                let r = &a.report;
                s.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    a.id, r.order, r.solvable, r.is_rational, r.is_cut, r.is_semirational, r.qg_degree
                ));
            }
            s
        }
    };
    write_output(out, c.out.as_ref(), &body)?;
    Ok(if any_fail { EXIT_FAIL_FOUND } else { EXIT_OK })
}

fn survey(args: &SurveyArgs, out: &mut dyn Write) -> Result<i32, Failed> {
    let c = &args.common;
    let records = parse_corpus(&args.corpus)?;
    let config = SurveyConfig {
        cap: c.cap,
        checks: c.checks.clone().unwrap_or_else(|| Check::ALL.to_vec()),
        workers: args.workers,
    };
    let label = args
        .corpus
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let report = run_survey(&records, &config, &label);
    let body = render_report(&report, c.format.into())?;
    write_output(out, c.out.as_ref(), &body)?;
    Ok(if report.has_failures() {
        EXIT_FAIL_FOUND
    } else {
        EXIT_OK
    })
}

fn construct(args: &ConstructArgs, out: &mut dyn Write) -> Result<i32, Failed> {
    let spec: FamilySpec = args.family.parse()?;
    let group = spec.build()?;
    let family = args.family.trim();
    let tag = family.split(':').next().unwrap_or(family);
    let record = GroupRecord::from_group(family, &group)
        .with_name(spec.to_string())
        .with_tags([tag]);
    write_output(out, args.out.as_ref(), &write_corpus(&[record]))?;
    Ok(EXIT_OK)
}

fn an_fields(args: &AnFieldsArgs, out: &mut dyn Write) -> Result<i32, Failed> {
    if !(4..=crate::rationality::ALTERNATING_BOUND).contains(&args.max_n) {
        return Err(Error::BoundExceeded {
            n: args.max_n,
            min: 4,
            max: crate::rationality::ALTERNATING_BOUND,
        }
        .into());
    }
    let rows = (4..=args.max_n)
        .map(|n| alternating_field(n, args.max_n))
        .collect::<Result<Vec<_>, Error>>()?;
    let body = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).map_err(Error::from)?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("n,exponent,qg_degree\n");
            for r in &rows {
                s.push_str(&format!("{},{},{}\n", r.n, r.exponent, r.qg_degree));
            }
            s
        }
        Format::Text => {
            let mut s = format!("{:>3} {:>10} {:>10}\n", "n", "exp(A_n)", "|Q(A_n):Q|");
            for r in &rows {
                s.push_str(&format!("{:>3} {:>10} {:>10}\n", r.n, r.exponent, r.qg_degree));
            }
            s
        }
    };
    write_output(out, args.out.as_ref(), &body)?;
    Ok(EXIT_OK)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let outcome = match &cli.command {
        Command::Analyze(a) => analyze(a, out),
        Command::Survey(a) => survey(a, out),
        Command::Construct(a) => construct(a, out),
        Command::AnFields(a) => an_fields(a, out),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
