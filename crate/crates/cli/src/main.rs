//! `isospec`: exact Lie-algebraic discretization from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 mathematical domain error (closure violation, inadmissible parameter).

mod operator;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isospec::io::{
    certificate_json, discretization_json, family_csv, family_json, polynomials_csv, spectral_report_json,
    stencil_csv, stencil_json,
};
use isospec::operators::ClassicalFamily;
use isospec::spectral::{
    discrete_family, isospectral_check, matrix_on_basis, spectral_report, stencil_extract, Realization,
    HERMITE_SIGN_NOTE,
};
use isospec::verify::{self, SuiteSelection, VerifySummary};
use isospec::{BasisTag, Error, ExactScalar, Poly};
use serde_json::{json, Value};

use operator::{fraction, grid_step, OperatorArgs};

#[derive(Parser, Debug)]
#[command(name = "isospec", version, about = "Exact isospectral discretization of polynomial differential operators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RealizationKind {
    Continuum,
    Lattice,
}

#[derive(clap::Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice form of an operator, with its stencil.
    Discretize {
        #[command(flatten)]
        op: OperatorArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Stencil points and coefficient polynomials of the lattice operator.
    Stencil {
        #[command(flatten)]
        op: OperatorArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Matrix, characteristic polynomial and eigenpairs on polynomials of degree ≤ d.
    Spectrum {
        #[command(flatten)]
        op: OperatorArgs,
        /// Degree bound d (default: the spin for QES operators, else 4).
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = RealizationKind::Lattice)]
        realization: RealizationKind,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the verification suites.
    Verify {
        /// heisenberg, representations, e2, stencils, isospectral, hermite, presets, qes, oracles or all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random draws per randomized suite (default: per-suite).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, env = "ISOSPEC_SEED", default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Discrete analogues of a classical family on a grid.
    Family {
        /// discrete-hermite, discrete-laguerre, discrete-legendre or discrete-jacobi.
        #[arg(long)]
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        beta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<String>,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = std::result::Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn emit(out: &OutputArgs, body: String) -> std::result::Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> Failure {
    Failure::Usage(format!("--format {format:?} is not available for {command}").to_lowercase())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Discretize { op, out } => {
            let r = op.resolve()?;
            let body = match out.format {
                Format::Json => {
                    let mut v = discretization_json(&r.lattice);
                    v["operator"] = json!(r.name);
                    v["notes"] = json!(r.notes);
                    pretty(&v)
                }
                Format::Csv => stencil_csv(&stencil_extract(&r.lattice))?,
                Format::Text => format!("{}\n", r.lattice),
            };
            emit(&out, body)?;
            Ok(true)
        }
        Command::Stencil { op, out } => {
            let r = op.resolve()?;
            let s = stencil_extract(&r.lattice);
            let body = match out.format {
                Format::Json => {
                    let mut v = stencil_json(&s, &r.delta);
                    v["operator"] = json!(r.name);
                    pretty(&v)
                }
                Format::Csv => stencil_csv(&s)?,
                Format::Text => {
                    let mut t = format!("{} points:", s.point_count());
                    for (k, p) in s.shifts.iter().zip(&s.coeffs) {
                        let _ = write!(t, "\n  x{k:+}δ: {p}");
                    }
                    t + "\n"
                }
            };
            emit(&out, body)?;
            Ok(true)
        }
        Command::Spectrum { op, degree, realization, out } => {
            let r = op.resolve()?;
            let d = degree.unwrap_or_else(|| op.default_degree());
            let (real, basis) = match realization {
                RealizationKind::Continuum => (Realization::Continuum(&r.element), BasisTag::Monomial),
                RealizationKind::Lattice => {
                    (Realization::Lattice(&r.lattice), BasisTag::QuasiMonomial(r.delta.clone()))
                }
            };
            let mut report = spectral_report(matrix_on_basis(&real, &basis, d, true)?);
            report.notes.extend(r.notes.iter().cloned());
            let certificate = isospectral_check(&r.element, &r.delta, d)?;
            let body = match out.format {
                Format::Json => {
                    let mut v = spectral_report_json(&report);
                    v["operator"] = json!(r.name);
                    v["realization"] = json!(format!("{realization:?}").to_lowercase());
                    v["certificate"] = certificate_json(&certificate);
                    pretty(&v)
                }
                Format::Csv => match &report.eigenpairs {
                    Some(pairs) => polynomials_csv(&pairs.iter().map(|(_, v)| Poly::from_coeffs(v.coeffs().to_vec())).collect::<Vec<_>>())?,
                    None => return Err(Failure::Domain(report.warning.clone().unwrap_or_default())),
                },
                Format::Text => spectrum_text(&report, certificate.verdict),
            };
            emit(&out, body)?;
            Ok(true)
        }
        Command::Verify { suite, trials, seed, out } => {
            let selection: SuiteSelection = suite.parse()?;
            let summary = verify::run(&selection, seed, trials);
            let body = match out.format {
                Format::Json => pretty(&serde_json::to_value(&summary).expect("plain data")),
                Format::Text => verify_text(&summary),
                Format::Csv => return Err(unsupported(out.format, "verify")),
            };
            emit(&out, body)?;
            Ok(summary.ok)
        }
        Command::Family { name, alpha, beta, delta, kmax, out } => {
            let alpha = alpha.as_deref().map(fraction).transpose()?;
            let beta = beta.as_deref().map(fraction).transpose()?;
            let family = ClassicalFamily::from_name(&name, alpha, beta)?;
            let rows = discrete_family(&family, &grid_step(&delta)?, kmax)?;
            let body = match out.format {
                Format::Json => {
                    let mut v = json!({ "family": name, "rows": family_json(&rows) });
                    if family == ClassicalFamily::Hermite {
                        v["notes"] = json!([HERMITE_SIGN_NOTE]);
                    }
                    pretty(&v)
                }
                Format::Csv => family_csv(&rows)?,
                Format::Text => rows
                    .iter()
                    .map(|r| {
                        format!(
                            "k={} lambda={} verified={} : {}\n",
                            r.k,
                            r.eigenvalue.to_fraction_string(),
                            r.verified,
                            r.discrete_monomial
                        )
                    })
                    .collect(),
            };
            emit(&out, body)?;
            Ok(rows.iter().all(|r| r.verified))
        }
    }
}

fn spectrum_text(report: &isospec::spectral::SpectralReport<isospec::Rational>, isospectral: bool) -> String {
    let s = |q: &isospec::Rational| q.to_fraction_string();
    let mut t = String::new();
    let _ = writeln!(t, "diagonal: {}", report.matrix.diagonal().iter().map(s).collect::<Vec<_>>().join(", "));
    let _ = writeln!(t, "char poly: {}", report.char_poly);
    let _ = writeln!(t, "triangular: {}", report.triangular);
    let _ = writeln!(t, "continuum and lattice char polys equal: {isospectral}");
    if let Some(pairs) = &report.eigenpairs {
        for (l, v) in pairs {
            let _ = writeln!(t, "  {} : {}", s(l), v.to_monomial());
        }
    }
    for n in &report.notes {
        let _ = writeln!(t, "note: {n}");
    }
    if let Some(w) = &report.warning {
        let _ = writeln!(t, "warning: {w}");
    }
    t
}

fn verify_text(summary: &VerifySummary) -> String {
    let mut t = String::new();
    for s in &summary.suites {
        let _ = writeln!(t, "{}: {}/{} passed", s.suite, s.passed(), s.checks.len());
        for c in s.checks.iter().filter(|c| !c.passed) {
            let _ = writeln!(t, "  FAIL {}: {}", c.name, c.detail);
        }
    }
    let _ = writeln!(t, "total: {}/{} passed (seed {})", summary.passed, summary.total, summary.seed);
    t
}
