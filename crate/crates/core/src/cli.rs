//! Command-line front end: `basis`, `swap`, `decompose` and `verify`.
//!
//! Exit codes are stable: 0 success, 1 verification failure, 2 usage or
//! input error, 3 internal consistency failure (rule and formula disagree).
//!
//! JSON schemas for every output, and for the matrix input file, live in
//! `schema/` next to this crate's manifest.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error as LibError;
use crate::gellmann::{basis, GeneratorLabel};
use crate::matrix::{format_complex, DenseMatrix, Tolerance, C64};
use crate::product::{check_identities, decompose_product, IdentityReport};
use crate::swap::{swap_by_formula, swap_by_rule, SwapMatrix};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

/// Environment variable overriding the default absolute tolerance.
pub const TOLERANCE_ENV: &str = "TCM_TOLERANCE";

const PRETTY_DIGITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapMethod {
    Rule,
    Formula,
    Both,
}

#[derive(Debug, Parser)]
#[command(
    name = "tcm",
    version,
    about = "Tensor commutation matrices and generalized Gell-Mann decompositions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the n²-1 generalized Gell-Mann generators in canonical order.
    Basis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
    /// Build the swap matrix U_{p⊗q}.
    Swap {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = SwapMethod::Formula)]
        method: SwapMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        /// Also emit the dense 0/1 matrix.
        #[arg(long)]
        dense: bool,
    },
    /// Decompose a pq x pq operator over the product Gell-Mann basis.
    Decompose {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// `swap` for U_{p⊗q}, otherwise a path to a JSON matrix file.
        #[arg(long, default_value = "swap")]
        input: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
        /// Coefficients with modulus at or below this are left out of term listings.
        #[arg(long, default_value_t = 1e-12)]
        threshold: f64,
    },
    /// Check the swap-matrix Gell-Mann identities for n = 2..=n_max.
    Verify {
        #[arg(long = "n-max")]
        n_max: usize,
        /// Defaults to $TCM_TOLERANCE, then 1e-10.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Pretty)]
        format: OutputFormat,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] LibError),
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

/// JSON form of a matrix, also the matrix input file format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    /// Row-major `[re, im]` pairs.
    pub entries: Vec<[f64; 2]>,
}

impl MatrixJson {
    pub fn from_dense(m: &DenseMatrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: m.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn to_dense(&self) -> Result<DenseMatrix, LibError> {
        let data = self
            .entries
            .iter()
            .map(|&[re, im]| C64::new(re, im))
            .collect();
        DenseMatrix::from_vec(self.rows, self.cols, data)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub ordinal: usize,
    pub label: GeneratorLabel,
    pub name: String,
    pub matrix: MatrixJson,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BasisOutput {
    pub command: String,
    pub n: usize,
    pub count: usize,
    pub generators: Vec<GeneratorRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SwapOutput {
    pub command: String,
    pub p: usize,
    pub q: usize,
    pub method: SwapMethod,
    pub size: usize,
    /// 1-based `[row, col]` of each 1, sorted by row.
    pub positions: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dense: Option<MatrixJson>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TermRecord {
    pub a: usize,
    pub b: usize,
    pub left: String,
    pub right: String,
    pub value: [f64; 2],
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub command: String,
    pub p: usize,
    pub q: usize,
    pub input: String,
    pub threshold: f64,
    pub labels_left: Vec<String>,
    pub labels_right: Vec<String>,
    /// `p²` rows of `q²` `[re, im]` pairs; index 0 is the identity.
    pub grid: Vec<Vec<[f64; 2]>>,
    pub terms: Vec<TermRecord>,
    pub reconstruction_error: f64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub command: String,
    pub n_max: usize,
    pub tol: f64,
    pub pass: bool,
    pub results: Vec<IdentityReport>,
}

/// Parses `args` (including the program name) and runs the command,
/// reading the tolerance override from the process environment.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_tol = std::env::var(TOLERANCE_ENV).ok();
    run_with_env(args, env_tol.as_deref(), out, err)
}

/// [`run`] with an explicit value for the tolerance environment variable.
pub fn run_with_env<I, T>(
    args: I,
    env_tol: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };

    // Render into a buffer so failed commands leave stdout empty.
    let mut buf = Vec::new();
    let result = dispatch(cli.command, env_tol, &mut buf, err);
    match result {
        Ok(code) => {
            if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(
    command: Command,
    env_tol: Option<&str>,
    out: &mut Vec<u8>,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    match command {
        Command::Basis { n, format } => cmd_basis(n, format, out),
        Command::Swap {
            p,
            q,
            method,
            format,
            dense,
        } => cmd_swap(p, q, method, format, dense, out, err),
        Command::Decompose {
            p,
            q,
            input,
            format,
            threshold,
        } => cmd_decompose(p, q, &input, format, threshold, out),
        Command::Verify { n_max, tol, format } => {
            let tol = resolve_tolerance(tol, env_tol)?;
            cmd_verify(n_max, tol, format, out, err)
        }
    }
}

fn resolve_tolerance(flag: Option<f64>, env_tol: Option<&str>) -> Result<Tolerance, CliError> {
    let raw = match (flag, env_tol) {
        (Some(t), _) => t,
        (None, Some(s)) => s.trim().parse::<f64>().map_err(|_| {
            CliError::Usage(format!("{TOLERANCE_ENV} is not a decimal number: {s:?}"))
        })?,
        (None, None) => return Ok(Tolerance::default()),
    };
    Ok(Tolerance::new(raw)?)
}

fn write_json<T: Serialize>(out: &mut Vec<u8>, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    out.push(b'\n');
    Ok(())
}

fn write_pretty_matrix(out: &mut Vec<u8>, m: &DenseMatrix) -> io::Result<()> {
    let cells: Vec<Vec<String>> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| format_complex(m.get(r, c), PRETTY_DIGITS))
                .collect()
        })
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in cells {
        let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
        writeln!(out, "  [ {} ]", line.join("  "))?;
    }
    Ok(())
}

fn cmd_basis(n: usize, format: OutputFormat, out: &mut Vec<u8>) -> Result<i32, CliError> {
    let b = basis(n)?;
    match format {
        OutputFormat::Json => {
            let generators = b
                .iter()
                .enumerate()
                .map(|(k, (label, m))| GeneratorRecord {
                    ordinal: k + 1,
                    label,
                    name: label.to_string(),
                    matrix: MatrixJson::from_dense(m),
                })
                .collect();
            write_json(
                out,
                &BasisOutput {
                    command: "basis".into(),
                    n,
                    count: b.len(),
                    generators,
                },
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "ordinal,label,row,col,re,im")?;
            for (k, (label, m)) in b.iter().enumerate() {
                for r in 0..n {
                    for c in 0..n {
                        let z = m.get(r, c);
                        writeln!(
                            out,
                            "{},{},{},{},{},{}",
                            k + 1,
                            label,
                            r + 1,
                            c + 1,
                            z.re,
                            z.im
                        )?;
                    }
                }
            }
        }
        OutputFormat::Pretty => {
            for (k, (label, m)) in b.iter().enumerate() {
                writeln!(out, "#{} {}", k + 1, label)?;
                write_pretty_matrix(out, m)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_swap(
    p: usize,
    q: usize,
    method: SwapMethod,
    format: OutputFormat,
    dense: bool,
    out: &mut Vec<u8>,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let (u, agreement): (SwapMatrix, Option<bool>) = match method {
        SwapMethod::Formula => (swap_by_formula(p, q)?, None),
        SwapMethod::Rule => (swap_by_rule(p, q)?, None),
        SwapMethod::Both => {
            let f = swap_by_formula(p, q)?;
            let r = swap_by_rule(p, q)?;
            let agree = f == r;
            (f, Some(agree))
        }
    };
    let positions = u.positions();
    match format {
        OutputFormat::Json => {
            write_json(
                out,
                &SwapOutput {
                    command: "swap".into(),
                    p,
                    q,
                    method,
                    size: u.size(),
                    positions: positions.iter().map(|&(r, c)| [r, c]).collect(),
                    agreement,
                    dense: dense.then(|| MatrixJson::from_dense(&u.dense())),
                },
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "row,col")?;
            for (r, c) in &positions {
                writeln!(out, "{r},{c}")?;
            }
            if let Some(agree) = agreement {
                writeln!(err, "agreement: {}", if agree { "yes" } else { "no" })?;
            }
        }
        OutputFormat::Pretty => {
            writeln!(out, "U_{{{p}⊗{q}}} ({0}x{0})", u.size())?;
            let list: Vec<String> = positions
                .iter()
                .map(|(r, c)| format!("({r},{c})"))
                .collect();
            writeln!(out, "ones at: {}", list.join(" "))?;
            if let Some(agree) = agreement {
                writeln!(
                    out,
                    "rule and formula agree: {}",
                    if agree { "yes" } else { "no" }
                )?;
            }
            if dense {
                write_pretty_matrix(out, &u.dense())?;
            }
        }
    }
    match agreement {
        Some(false) => {
            writeln!(
                err,
                "error: rule and formula constructions disagree for p={p}, q={q}"
            )?;
            Ok(EXIT_INCONSISTENT)
        }
        _ => Ok(EXIT_OK),
    }
}

/// Reads a matrix file in the `{"rows", "cols", "entries"}` format.
pub fn read_matrix_file(path: &Path) -> Result<DenseMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let parsed: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| format!("invalid matrix file {}: {e}", path.display()))?;
    parsed
        .to_dense()
        .map_err(|e| format!("invalid matrix file {}: {e}", path.display()))
}

fn cmd_decompose(
    p: usize,
    q: usize,
    input: &str,
    format: OutputFormat,
    threshold: f64,
    out: &mut Vec<u8>,
) -> Result<i32, CliError> {
    if !(threshold.is_finite() && threshold >= 0.0) {
        return Err(CliError::Usage(format!(
            "threshold must be a finite non-negative number, got {threshold}"
        )));
    }
    for (name, v) in [("p", p), ("q", q)] {
        if v < 2 {
            return Err(CliError::Usage(format!(
                "--{name} must be at least 2, got {v}"
            )));
        }
    }
    let m = if input == "swap" {
        swap_by_formula(p, q)?.dense()
    } else {
        let m = read_matrix_file(Path::new(input)).map_err(CliError::Usage)?;
        if m.shape() != (p * q, p * q) {
            return Err(CliError::Usage(format!(
                "matrix in {input} is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                p * q,
                p * q
            )));
        }
        m
    };

    let coeffs = decompose_product(&m, p, q)?;
    let terms = coeffs.terms(threshold)?;
    match format {
        OutputFormat::Json => {
            let reconstruction_error = coeffs.reconstruct()?.max_abs_diff(&m)?;
            let labels = |n: usize| -> Result<Vec<String>, CliError> {
                Ok(crate::product::factor_labels(n)?
                    .iter()
                    .map(ToString::to_string)
                    .collect())
            };
            write_json(
                out,
                &DecomposeOutput {
                    command: "decompose".into(),
                    p,
                    q,
                    input: input.to_string(),
                    threshold,
                    labels_left: labels(p)?,
                    labels_right: labels(q)?,
                    grid: coeffs
                        .rows()
                        .into_iter()
                        .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
                        .collect(),
                    terms: terms
                        .iter()
                        .map(|t| TermRecord {
                            a: t.a,
                            b: t.b,
                            left: t.left.to_string(),
                            right: t.right.to_string(),
                            value: [t.value.re, t.value.im],
                        })
                        .collect(),
                    reconstruction_error,
                },
            )?;
        }
        OutputFormat::Csv => {
            writeln!(out, "a,b,left,right,re,im")?;
            for t in &terms {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    t.a, t.b, t.left, t.right, t.value.re, t.value.im
                )?;
            }
        }
        OutputFormat::Pretty => {
            writeln!(
                out,
                "{} nonzero coefficients (|c| > {threshold:e}) over {}x{} product basis",
                terms.len(),
                p * p,
                q * q
            )?;
            for t in &terms {
                writeln!(
                    out,
                    "{}⊗{}: {}",
                    t.left,
                    t.right,
                    format_complex(t.value, PRETTY_DIGITS)
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    n_max: usize,
    tol: Tolerance,
    format: OutputFormat,
    out: &mut Vec<u8>,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if n_max < 2 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 2, got {n_max}"
        )));
    }
    let results = (2..=n_max)
        .map(|n| check_identities(n, tol))
        .collect::<Result<Vec<_>, _>>()?;
    let pass = results.iter().all(|r| r.pass);
    match format {
        OutputFormat::Json => write_json(
            out,
            &VerifyOutput {
                command: "verify".into(),
                n_max,
                tol: tol.abs_eps(),
                pass,
                results,
            },
        )?,
        OutputFormat::Csv => {
            writeln!(
                out,
                "n,theorem_error,offdiag_error,diagonal_error,assembly_error,pass"
            )?;
            for r in &results {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n,
                    r.theorem_error,
                    r.offdiag_error,
                    r.diagonal_error,
                    r.assembly_error,
                    r.pass
                )?;
            }
        }
        OutputFormat::Pretty => {
            for r in &results {
                writeln!(
                    out,
                    "n={:<3} theorem={:.3e} offdiag={:.3e} diagonal={:.3e} assembly={:.3e} {}",
                    r.n,
                    r.theorem_error,
                    r.offdiag_error,
                    r.diagonal_error,
                    r.assembly_error,
                    if r.pass { "ok" } else { "FAIL" }
                )?;
            }
        }
    }
    if pass {
        writeln!(
            err,
            "all identities hold for n = 2..={n_max} within {:e}",
            tol.abs_eps()
        )?;
        Ok(EXIT_OK)
    } else {
        writeln!(err, "identity check failed within {:e}", tol.abs_eps())?;
        Ok(EXIT_VERIFY_FAILED)
    }
}
