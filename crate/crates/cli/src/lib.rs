//! Command implementations for the `gitquot` binary.
//!
//! Each command returns the text for standard output; files requested with
//! `--json` or `--svg` are written by the command itself.

pub mod problem;
pub mod svg;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use gitquot::quotient::{graded_monomials, invariant_ring, quotient_report, sweep, GradedSolutions, DEFAULT_DEGREE_BOUND};
use gitquot::report::{render_report, render_sweep, ReportJson, SweepJson};
use gitquot::{Mode, QuotientReport};
use serde::Serialize;
use thiserror::Error;

pub use problem::ProblemFile;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Pipeline(#[from] gitquot::Error),
}

impl CliError {
    /// 2 for unreadable or invalid input, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Invalid(_) => 2,
            CliError::Io(_) | CliError::Pipeline(_) => 1,
        }
    }
}

/// Command-line overrides of problem-file settings.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub degree_bound: Option<u64>,
    pub mode: Option<Mode>,
}

struct Settings {
    mode: Mode,
    degree_bound: u64,
}

fn settings(p: &ProblemFile, o: &Overrides) -> Settings {
    Settings {
        mode: o.mode.unwrap_or(p.mode.into()),
        degree_bound: o.degree_bound.or(p.degree_bound).unwrap_or(DEFAULT_DEGREE_BOUND),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct InvariantsJson {
    mode: String,
    degree_one_sections: Vec<String>,
    generators: gitquot::report::GeneratorsJson,
}

/// Degree-1 invariant sections and the invariant-ring generators.
pub fn cmd_invariants(p: &ProblemFile, o: &Overrides, json: Option<&Path>) -> Result<String, CliError> {
    let s = settings(p, o);
    let action = p.action()?;
    let names = action.names();
    let ring = invariant_ring(&action, s.mode, s.degree_bound)?;
    let mut out = String::new();
    let mut sections = Vec::new();
    let _ = writeln!(out, "mode: {}", s.mode);
    match graded_monomials(&action, 1, s.mode)? {
        GradedSolutions::Monomials(mut ms) => {
            ms.sort();
            sections = ms.iter().map(|m| m.display(names).to_string()).collect();
            let _ = writeln!(out, "degree-1 sections: {}", sections.join(", "));
        }
        GradedSolutions::Coset(c) => {
            let basis: Vec<String> = c.kernel_basis.iter().map(|b| b.to_string()).collect();
            match &c.particular {
                Some(p) => {
                    let _ = writeln!(out, "degree-1 solutions: {} + span{{{}}}", p, basis.join(", "));
                }
                None => {
                    let _ = writeln!(out, "degree-1 solutions: none");
                }
            }
        }
    }
    let _ = writeln!(out, "generators ({}):", ring.generators.len());
    for g in &ring.generators {
        let _ = writeln!(out, "  {}  exponents {}  degree {}", g.display(names), g.exponents, g.degree);
    }
    let _ = writeln!(
        out,
        "complete: {} (no irreducible elements past degree {}; bound {})",
        ring.complete, ring.certificate_degree, ring.verified_degree
    );
    if let Some(path) = json {
        let dto = InvariantsJson {
            mode: s.mode.to_string(),
            degree_one_sections: sections,
            generators: gitquot::report::GeneratorsJson {
                ring: {
                    let parts: Vec<String> = ring.generators.iter().map(|g| g.display(names).to_string()).collect();
                    format!("C[{}]", parts.join(", "))
                },
                monomials: ring
                    .generators
                    .iter()
                    .map(|g| gitquot::report::MonomialJson {
                        exponents: g.exponents.iter().cloned().map(gitquot::report::JsonInt).collect(),
                        degree: g.degree,
                        display: g.display(names).to_string(),
                    })
                    .collect(),
                verified_degree: ring.verified_degree,
                certificate_degree: ring.certificate_degree,
                complete: ring.complete,
            },
        };
        write_file(path, &to_json(&dto))?;
    }
    Ok(out)
}

pub fn quotient(p: &ProblemFile, o: &Overrides) -> Result<QuotientReport, CliError> {
    let s = settings(p, o);
    Ok(quotient_report(&p.action()?, s.mode, s.degree_bound)?)
}

/// The full report as JSON text.
pub fn quotient_json(p: &ProblemFile, o: &Overrides) -> Result<String, CliError> {
    Ok(to_json(&ReportJson::from_report(&quotient(p, o)?)))
}

pub fn cmd_quotient(p: &ProblemFile, o: &Overrides, json: Option<&Path>, svg: Option<&Path>) -> Result<String, CliError> {
    let report = quotient(p, o)?;
    if let Some(path) = json {
        write_file(path, &to_json(&ReportJson::from_report(&report)))?;
    }
    if let Some(path) = svg {
        let picture = svg::render_svg(&report)
            .ok_or_else(|| CliError::Io("no polytope of dimension at most 2 to draw".into()))?;
        write_file(path, &picture)?;
    }
    Ok(render_report(&report))
}

/// The sweep table as JSON text.
pub fn sweep_json(p: &ProblemFile, o: &Overrides) -> Result<String, CliError> {
    Ok(to_json(&SweepJson::from_sweep(&run_sweep(p, o)?)))
}

fn run_sweep(p: &ProblemFile, o: &Overrides) -> Result<gitquot::quotient::SweepResult, CliError> {
    let s = settings(p, o);
    let ranges = p
        .sweep_ranges()
        .ok_or_else(|| CliError::Invalid("sweep needs a sweep_box in the problem file".into()))?;
    Ok(sweep(&p.action()?, &ranges, s.mode, s.degree_bound)?)
}

pub fn cmd_sweep(p: &ProblemFile, o: &Overrides, json: Option<&Path>) -> Result<String, CliError> {
    let result = run_sweep(p, o)?;
    if let Some(path) = json {
        write_file(path, &to_json(&SweepJson::from_sweep(&result)))?;
    }
    Ok(render_sweep(&result))
}

/// Location of the bundled fixture problems.
pub fn fixtures_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}
