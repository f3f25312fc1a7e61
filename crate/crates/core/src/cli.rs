//! Command-line front end: `tabulate`, `verify` and `eval`.
//!
//! Exit codes: 0 success, 1 a check failed, 2 configuration error (including
//! a rejected parameter window, whose inequality is printed).

use crate::ball::Convention;
use crate::cone_solid::{cone_basis, cone_element};
use crate::cone_surface::{surface_basis, surface_element};
use crate::error::{Error, Result};
use crate::univariate::{eval_m, eval_n, m_poly, n_poly, FiniteFamily};
use crate::verifier::{run_suite, Descriptor, FamilySelector, Report, Suite, Thresholds, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable read as the default of `verify --output-dir`.
pub const OUTPUT_DIR_ENV: &str = "FINITE_CONE_OUTPUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "finite-cone",
    version,
    about = "Finite orthogonal polynomials on the cone and its surface"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every basis element of degree <= n.
    Tabulate(TabulateArgs),
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// Evaluate basis elements at points.
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    /// Orthonormal ball factors
    Orthonormal,
    /// d = 1 only: unnormalized Gegenbauer factors C_m^(μ)(x/t) t^m
    PaperGegenbauer,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Orthonormal => Convention::Orthonormal,
            ConventionArg::PaperGegenbauer => Convention::PaperGegenbauer,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn extension(&self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Family selection and parameters shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub family: FamilySelector,
    /// Dimension of x (1, 2 or 3); ignored by uni-* families.
    #[arg(short = 'd', default_value_t = 1)]
    pub d: usize,
    /// Ball parameter, μ > -1/2 (μ > 0 under paper-gegenbauer).
    #[arg(long, default_value_t = 0.5, allow_hyphen_values = true)]
    pub mu: f64,
    #[arg(short = 'p', allow_hyphen_values = true)]
    pub p: Option<f64>,
    #[arg(short = 'q', allow_hyphen_values = true)]
    pub q: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Largest total degree N.
    #[arg(short = 'n', default_value_t = 3)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::Orthonormal)]
    pub convention: ConventionArg,
}

impl FamilyArgs {
    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            d: self.d,
            mu: self.mu,
            p: self.p,
            q: self.q,
            beta: self.beta,
            convention: self.convention.into(),
            ..Descriptor::new(self.family, self.n_max)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct TabulateArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report path. Without it the report goes to --output-dir, or to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Directory for reports named `report-<family>-<suite>.<ext>`.
    #[arg(long, env = OUTPUT_DIR_ENV)]
    pub output_dir: Option<PathBuf>,
    /// Values of p for the limit suite.
    #[arg(long, value_delimiter = ',', default_values_t = [1e2, 1e3, 1e4])]
    pub p_grid: Vec<f64>,
    /// Count window rejections as passes (boundary probing).
    #[arg(long)]
    pub probe: bool,
    /// Threshold for relative identity residuals.
    #[arg(long)]
    pub identity_tol: Option<f64>,
    /// Threshold for normalized off-diagonal Gram entries.
    #[arg(long)]
    pub gram_offdiag_tol: Option<f64>,
    /// Threshold for relative Gram diagonal deviations.
    #[arg(long)]
    pub gram_diag_tol: Option<f64>,
    /// Accepted limit exponent window as LO,HI.
    #[arg(long, value_delimiter = ',', num_args = 2)]
    pub limit_window: Option<Vec<f64>>,
}

impl VerifyArgs {
    pub fn thresholds(&self) -> Thresholds {
        let mut th = Thresholds::default();
        if let Some(v) = self.identity_tol {
            th.identity = v;
        }
        if let Some(v) = self.gram_offdiag_tol {
            th.gram_offdiag = v;
        }
        if let Some(v) = self.gram_diag_tol {
            th.gram_diag = v;
        }
        if let Some(w) = &self.limit_window {
            th.limit_exponent = (w[0], w[1]);
        }
        th
    }
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Element as N,M[,K] (K is the zero-based angular index). For uni-*
    /// families give just N. Without it every element of degree <= n is
    /// evaluated.
    #[arg(long, value_delimiter = ',')]
    pub element: Option<Vec<usize>>,
    /// Point as comma-separated coordinates x_1,..,x_d,t (just t for uni-*).
    /// Repeatable.
    #[arg(long = "point", allow_hyphen_values = true, required = true)]
    pub points: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// One tabulated or evaluated element.
#[derive(Debug, Clone, Serialize)]
struct Row {
    label: String,
    polynomial: String,
    norm_sq: f64,
}

#[derive(Debug, Clone, Serialize)]
struct EvalRow {
    label: String,
    point: Vec<f64>,
    value: f64,
}

/// Polynomials of degree `<= n_max` with their labels and norms.
fn basis_rows(desc: &Descriptor) -> Result<Vec<Row>> {
    use FamilySelector as F;
    desc.check_window()?;
    let mut rows = Vec::new();
    match desc.family {
        F::UniM | F::UniN => {
            let fam = desc.finite_family()?;
            for n in 0..=desc.n_max {
                let (poly, norm) = match fam {
                    FiniteFamily::M(pq) => (m_poly(n, pq), crate::univariate::norm_m(n, pq)?),
                    FiniteFamily::N(pp) => (n_poly(n, pp), crate::univariate::norm_n(n, pp)?),
                };
                rows.push(Row {
                    label: format!("n={n}"),
                    polynomial: poly.render("t"),
                    norm_sq: norm,
                });
            }
        }
        F::ConeM | F::ConeN | F::ConeL => {
            let params = desc.cone_params()?;
            for n in 0..=desc.n_max {
                for e in cone_basis(&params, n)? {
                    rows.push(Row {
                        label: e.label(),
                        polynomial: e.materialized.render(),
                        norm_sq: e.norm_sq,
                    });
                }
            }
        }
        _ => {
            let params = desc.surface_params()?;
            for n in 0..=desc.n_max {
                for e in surface_basis(&params, n)? {
                    rows.push(Row {
                        label: e.label(),
                        polynomial: e.materialized.render(),
                        norm_sq: e.norm_sq,
                    });
                }
            }
        }
    }
    Ok(rows)
}

fn parse_point(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| Error::Domain(format!("bad coordinate {s:?}")))
        })
        .collect()
}

/// Parses every `--point`, checking its length against the family.
fn group_points(desc: &Descriptor, raw: &[String]) -> Result<Vec<Vec<f64>>> {
    let width = match desc.family {
        FamilySelector::UniM | FamilySelector::UniN => 1,
        _ => desc.d + 1,
    };
    raw.iter()
        .map(|text| {
            let pt = parse_point(text)?;
            if pt.len() != width {
                return Err(Error::DimensionMismatch {
                    left: width,
                    right: pt.len(),
                });
            }
            Ok(pt)
        })
        .collect()
}

fn eval_rows(
    desc: &Descriptor,
    element: Option<&[usize]>,
    points: &[Vec<f64>],
) -> Result<Vec<EvalRow>> {
    use FamilySelector as F;
    desc.check_window()?;
    let mut rows = Vec::new();
    let mut push = |label: String, f: &dyn Fn(&[f64]) -> Result<f64>| -> Result<()> {
        for pt in points {
            rows.push(EvalRow {
                label: label.clone(),
                point: pt.clone(),
                value: f(pt)?,
            });
        }
        Ok(())
    };
    let nmk = |el: &[usize]| -> Result<(usize, usize, usize)> {
        match el {
            [n, m] => Ok((*n, *m, 0)),
            [n, m, k] => Ok((*n, *m, *k)),
            _ => Err(Error::Domain("--element takes N,M or N,M,K".into())),
        }
    };
    match desc.family {
        F::UniM | F::UniN => {
            let fam = desc.finite_family()?;
            let degrees: Vec<usize> = match element {
                Some([n]) => vec![*n],
                Some(_) => {
                    return Err(Error::Domain(
                        "--element takes one degree for uni-* families".into(),
                    ))
                }
                None => (0..=desc.n_max).collect(),
            };
            for n in degrees {
                push(format!("n={n}"), &|pt| match fam {
                    FiniteFamily::M(pq) => eval_m(n, pq, pt[0]),
                    FiniteFamily::N(pp) => eval_n(n, pp, pt[0]),
                })?;
            }
        }
        F::ConeM | F::ConeN | F::ConeL => {
            let params = desc.cone_params()?;
            let elements = match element {
                Some(el) => {
                    let (n, m, k) = nmk(el)?;
                    vec![cone_element(&params, n, m, k)?]
                }
                None => (0..=desc.n_max)
                    .map(|n| cone_basis(&params, n))
                    .collect::<Result<Vec<_>>>()?
                    .concat(),
            };
            for e in &elements {
                push(e.label(), &|pt| e.eval(pt))?;
            }
        }
        _ => {
            let params = desc.surface_params()?;
            let elements = match element {
                Some(el) => {
                    let (n, m, k) = nmk(el)?;
                    vec![surface_element(&params, n, m, k)?]
                }
                None => (0..=desc.n_max)
                    .map(|n| surface_basis(&params, n))
                    .collect::<Result<Vec<_>>>()?
                    .concat(),
            };
            for e in &elements {
                push(e.label(), &|pt| e.eval(pt))?;
            }
        }
    }
    Ok(rows)
}

fn render_rows<T: Serialize>(rows: &[T], format: Format, text: impl Fn(&T) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in rows {
                w.serialize(r).expect("in-memory csv write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
        }
        Format::Text => rows.iter().map(|r| text(r) + "\n").collect(),
    }
}

#[derive(Debug, Serialize)]
struct EvalCsvRow<'a> {
    label: &'a str,
    point: String,
    value: f64,
}

fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    let desc = Descriptor {
        p_grid: args.p_grid.clone(),
        ..args.family.descriptor()
    };
    let report = run_suite(args.suite, &desc, &args.thresholds())?;
    let body = render_report(&report, args.format);
    let target = match (&args.output, &args.output_dir) {
        (Some(path), _) => Some(path.clone()),
        (None, Some(dir)) => Some(dir.join(format!(
            "report-{}-{}.{}",
            desc.family.name(),
            format!("{:?}", args.suite).to_lowercase(),
            args.format.extension()
        ))),
        (None, None) => None,
    };
    match &target {
        Some(path) => {
            std::fs::write(path, &body)
                .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display())))?;
            let _ = writeln!(err, "report written to {}", path.display());
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    if report.has_expected_failures() && !args.probe {
        for c in report
            .checks
            .iter()
            .filter(|c| c.verdict == Verdict::ExpectedFailure)
        {
            let _ = writeln!(err, "error: {}", c.detail);
        }
        return Ok(2);
    }
    if !report.passed() {
        let _ = writeln!(err, "{} check(s) failed", report.count(Verdict::Fail));
        return Ok(1);
    }
    Ok(0)
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match &cli.command {
        Command::Tabulate(a) => {
            let rows = basis_rows(&a.family.descriptor())?;
            let text = render_rows(&rows, a.format, |r| {
                format!("{}\t{}", r.label, r.polynomial)
            });
            let _ = out.write_all(text.as_bytes());
            Ok(0)
        }
        Command::Verify(a) => verify(a, out, err),
        Command::Eval(a) => {
            let desc = a.family.descriptor();
            let points = group_points(&desc, &a.points)?;
            let rows = eval_rows(&desc, a.element.as_deref(), &points)?;
            let text = match a.format {
                Format::Csv => {
                    let flat: Vec<_> = rows
                        .iter()
                        .map(|r| EvalCsvRow {
                            label: &r.label,
                            point: r
                                .point
                                .iter()
                                .map(f64::to_string)
                                .collect::<Vec<_>>()
                                .join(" "),
                            value: r.value,
                        })
                        .collect();
                    render_rows(&flat, Format::Csv, |_| String::new())
                }
                f => render_rows(&rows, f, |r| {
                    format!("{}\t{:?}\t{}", r.label, r.point, r.value)
                }),
            };
            let _ = out.write_all(text.as_bytes());
            Ok(0)
        }
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run_with<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return 2;
            }
            let _ = write!(out, "{}", e.render());
            return 0;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Entry point for the binary.
pub fn run() -> ExitCode {
    let code = run_with(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    ExitCode::from(code)
}
