//! Command-line front end: `build`, `info` and `check`.
//!
//! Exit codes: 0 pass, 1 property failure (witness printed), 2 usage, parse
//! or precondition error, 3 arithmetic overflow, 4 inconclusive.

pub mod file;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::algebra::{direct_sum, StructureConstants};
use crate::analysis::{self, CheckReport};
use crate::constructions::{cayley_dickson_chain, matrix_algebra_2x2, zorn_split_octonions};
use crate::error::Error;
use crate::sampling::{PlanMode, SamplingPlan};
use crate::scalars::FieldSpec;
use crate::zerodiv::{self, CensusStatus, HypothesisStatus};
use file::FileError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_UNKNOWN: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "altring",
    version,
    about = "Exact checks on finite-dimensional nonassociative algebras"
)]
pub struct Cli {
    /// Worker threads for parallel scans (results do not depend on it).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Octonion,
    Quaternion,
    Sedenion,
    Zorn,
    M2,
    Cd,
    DirectSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    Identities,
    Zerodiv,
    Hypothesis,
    Theorem,
    #[value(alias = "lemma31")]
    Consequences,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write an algebra file.
    Build {
        kind: Kind,
        /// Input files (direct-sum only).
        inputs: Vec<PathBuf>,
        /// Q or gf<p>.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Comma-separated Cayley-Dickson parameters, e.g. --gamma=-1,-1,-1.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        gamma: Option<Vec<String>>,
        /// Output path; stdout when omitted.
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
    /// Summarize an algebra: alternativity, associativity, nucleus and center.
    Info {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run one family of checks.
    Check {
        file: PathBuf,
        which: Which,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumerate every case; an error over an infinite field.
        #[arg(long)]
        exhaustive: bool,
        #[arg(long)]
        json: bool,
    },
}

/// Errors that end a command, mapped to exit codes.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Algebra(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Algebra(e)
    }
}

impl From<FileError> for Failure {
    fn from(e: FileError) -> Self {
        match e {
            FileError::Algebra(e) => Failure::Algebra(e),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Algebra(Error::Overflow) => EXIT_OVERFLOW,
            _ => EXIT_USAGE,
        }
    }

    pub fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Algebra(e) => e.to_string(),
        }
    }
}

pub fn parse_field(s: &str) -> Result<FieldSpec, Failure> {
    let t = s.trim().to_ascii_lowercase();
    if t == "q" || t == "qq" {
        return Ok(FieldSpec::Rationals);
    }
    let digits = t
        .strip_prefix("gf(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("gf"))
        .ok_or_else(|| Failure::Usage(format!("unknown field {s:?}; expected Q or gf<p>")))?;
    let p: u64 = digits
        .parse()
        .map_err(|_| Failure::Usage(format!("unknown field {s:?}; expected Q or gf<p>")))?;
    Ok(FieldSpec::gf(p)?)
}

fn build(kind: Kind, inputs: &[PathBuf], field: &str, gamma: Option<&[String]>) -> Result<StructureConstants, Failure> {
    if kind == Kind::DirectSum {
        if inputs.len() != 2 {
            return Err(Failure::Usage("direct-sum takes exactly two input files".into()));
        }
        let a = file::load(&inputs[0])?;
        let b = file::load(&inputs[1])?;
        return Ok(direct_sum(&a, &b)?);
    }
    if !inputs.is_empty() {
        return Err(Failure::Usage(format!("{kind:?} takes no input files").to_lowercase()));
    }
    let f = parse_field(field)?;
    let gammas = gamma
        .map(|g| g.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    let chain = |levels: usize, name: &str| -> Result<StructureConstants, Failure> {
        let g = gammas.clone().unwrap_or_else(|| vec![f.from_i64(-1); levels]);
        if g.len() != levels {
            return Err(Failure::Usage(format!(
                "{name} needs {levels} gamma values, got {}",
                g.len()
            )));
        }
        Ok(cayley_dickson_chain(f, &g)?.into_algebra().with_name(name))
    };
    match kind {
        Kind::Quaternion => chain(2, "quaternion"),
        Kind::Octonion => chain(3, "octonion"),
        Kind::Sedenion => chain(4, "sedenion"),
        Kind::Cd => {
            let g = gammas.ok_or_else(|| Failure::Usage("cd requires --gamma".into()))?;
            Ok(cayley_dickson_chain(f, &g)?.into_algebra())
        }
        Kind::Zorn | Kind::M2 if gammas.is_some() => {
            Err(Failure::Usage("--gamma only applies to Cayley-Dickson kinds".into()))
        }
        Kind::Zorn => Ok(zorn_split_octonions(f)),
        Kind::M2 => Ok(matrix_algebra_2x2(f)),
        Kind::DirectSum => unreachable!("handled above"),
    }
}

fn plan(samples: usize, seed: u64, exhaustive: bool) -> SamplingPlan {
    SamplingPlan {
        mode: if exhaustive {
            PlanMode::Exhaustive
        } else {
            PlanMode::Auto
        },
        samples,
        seed,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn info(a: &StructureConstants, json: bool) -> Result<String, Failure> {
    let alternative = analysis::is_alternative(a)?.passed();
    let associative = analysis::is_associative(a)?.passed();
    let nucleus = analysis::nucleus(a)?;
    let center = analysis::center(a)?;
    if json {
        let v = json!({
            "name": a.name(),
            "field": a.field().to_string(),
            "dim": a.dim(),
            "unit": a.unit(),
            "alternative": alternative,
            "associative": associative,
            "nucleus": nucleus,
            "center": center,
        });
        return Ok(serde_json::to_string_pretty(&v).expect("serializable"));
    }
    Ok(format!(
        "name: {}\nfield: {}\ndim: {}\nunit: {}\nalternative={} associative={} nucleus={} center={}",
        a.name(),
        a.field(),
        a.dim(),
        a.unit().map_or("none".to_string(), |u| a.format_element(&u)),
        yes(alternative),
        yes(associative),
        nucleus.dim(),
        center.dim()
    ))
}

struct Outcome {
    code: i32,
    text: String,
    result: serde_json::Value,
}

fn reports_outcome(a: &StructureConstants, reports: &[CheckReport]) -> Outcome {
    let code = if reports.iter().all(CheckReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    };
    let text = reports
        .iter()
        .map(|r| report::check_report(a, r))
        .collect::<Vec<_>>()
        .join("\n");
    Outcome {
        code,
        text,
        result: serde_json::to_value(reports).expect("serializable"),
    }
}

fn identities(a: &StructureConstants, plan: &SamplingPlan) -> Result<Vec<CheckReport>, Failure> {
    let alternative = analysis::is_alternative(a)?;
    if !alternative.passed() {
        return Ok(vec![alternative]);
    }
    let mut reports = vec![
        alternative,
        analysis::associator_skew_symmetry(a, plan)?,
        analysis::nucleus_closure(a)?,
    ];
    reports.extend(analysis::verify_alternative_identities(a, plan)?);
    Ok(reports)
}

fn check(a: &StructureConstants, which: Which, plan: &SamplingPlan) -> Result<Outcome, Failure> {
    Ok(match which {
        Which::Identities => reports_outcome(a, &identities(a, plan)?),
        Which::Consequences => reports_outcome(a, &zerodiv::check_hypothesis_consequences(a, plan)?),
        Which::Zerodiv => {
            let c = zerodiv::zero_divisor_census(a, plan)?;
            let code = match c.status {
                CensusStatus::NoneExist => EXIT_PASS,
                CensusStatus::Exist => EXIT_FAIL,
                CensusStatus::Unknown => EXIT_UNKNOWN,
            };
            Outcome {
                code,
                text: report::census(a, &c),
                result: serde_json::to_value(&c).expect("serializable"),
            }
        }
        Which::Hypothesis => {
            let h = zerodiv::hypothesis_check(a, plan)?;
            let code = match h.status {
                HypothesisStatus::Holds | HypothesisStatus::HoldsVacuously => EXIT_PASS,
                HypothesisStatus::Fails => EXIT_FAIL,
                HypothesisStatus::Unknown => EXIT_UNKNOWN,
            };
            Outcome {
                code,
                text: report::hypothesis(a, &h),
                result: serde_json::to_value(&h).expect("serializable"),
            }
        }
        Which::Theorem => {
            let t = zerodiv::check_theorem(a, plan)?;
            let undecided = t.applicable
                && t.hypothesis
                    .as_ref()
                    .is_some_and(|h| h.status == HypothesisStatus::Unknown)
                && t.conclusion.status != CensusStatus::NoneExist;
            let code = match (t.consistent, undecided) {
                (false, _) => EXIT_FAIL,
                (true, true) => EXIT_UNKNOWN,
                (true, false) => EXIT_PASS,
            };
            Outcome {
                code,
                text: report::theorem(a, &t),
                result: serde_json::to_value(&t).expect("serializable"),
            }
        }
    })
}

fn execute(cli: Cli, out: &mut Vec<u8>) -> Result<i32, Failure> {
    let emit = |out: &mut Vec<u8>, s: &str| -> Result<(), Failure> {
        writeln!(out, "{s}").map_err(|e| Failure::Usage(format!("writing output: {e}")))
    };
    match cli.command {
        Command::Build {
            kind,
            inputs,
            field,
            gamma,
            out: path,
        } => {
            let a = build(kind, &inputs, &field, gamma.as_deref())?;
            match path {
                Some(p) => file::save(&a, &p)?,
                None => out.extend_from_slice(file::AlgebraFile::from_algebra(&a).to_json().as_bytes()),
            }
            Ok(EXIT_PASS)
        }
        Command::Info { file: path, json } => {
            let a = file::load(&path)?;
            emit(out, &info(&a, json)?)?;
            Ok(EXIT_PASS)
        }
        Command::Check {
            file: path,
            which,
            samples,
            seed,
            exhaustive,
            json,
        } => {
            let a = file::load(&path)?;
            let plan = plan(samples, seed, exhaustive);
            let outcome = check(&a, which, &plan)?;
            if json {
                let v = json!({
                    "algebra": a.name(),
                    "field": a.field().to_string(),
                    "check": which,
                    "plan": plan,
                    "exit_code": outcome.code,
                    "result": outcome.result,
                });
                emit(out, &serde_json::to_string_pretty(&v).expect("serializable"))?;
            } else {
                emit(out, &outcome.text)?;
            }
            Ok(outcome.code)
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing reports to
/// `out` and errors to `err`; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli, &mut buf)),
            Err(e) => Err(Failure::Usage(format!("thread pool: {e}"))),
        },
        None => execute(cli, &mut buf),
    };
    if let Err(e) = out.write_all(&buf) {
        let _ = writeln!(err, "error: writing output: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.exit_code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
