//! Command-line front end: file formats, the analysis pipeline, reports and
//! the randomized cross-check harness.

pub mod analyze;
pub mod formats;
pub mod fuzz;
pub mod report;
pub mod text;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use ehrhart_core::geometry::free_sum;

use crate::analyze::{analyze_input, tensor, Options};
use crate::formats::{load, Input, InputError, InputKind, PolytopeFile};
use crate::report::InputDescriptor;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "hodge-ehrhart",
    version,
    about = "Ehrhart and Hodge-Ehrhart data of lattice polytopes and spectra"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Input kind; detected from the JSON keys by default.
    #[arg(long, value_enum, default_value_t = InputKind::Auto, global = true)]
    pub kind: InputKind,
    /// Oracle truncation order (default n + 3) and series order for tensor checks (default 8).
    #[arg(long, global = true)]
    pub trunc: Option<u64>,
    /// Reciprocity checks run for m = 1..=mmax.
    #[arg(long, default_value_t = 10, global = true)]
    pub mmax: u64,
    /// Relative tolerance for the root-line tests.
    #[arg(long, default_value_t = ehrhart_core::hodge::LINE_TOLERANCE, global = true)]
    pub tol: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report for one polytope or spectrum file.
    Analyze { file: PathBuf },
    /// Thom-Sebastiani sum of two inputs.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        /// Convolve spectra even when neither factor is reflexive.
        #[arg(long)]
        force: bool,
    },
    /// Free sum of two polytopes, written as a polytope file.
    Freesum {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Random simplicial polytopes through every check.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        dim_max: usize,
    },
}

impl Cli {
    pub fn options(&self) -> Options {
        Options {
            trunc: self.trunc,
            mmax: self.mmax,
            tol: self.tol,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Analysis(#[from] ehrhart_core::Error),
    #[error("{path}: {message}")]
    Usage { path: String, message: String },
    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

fn descriptor(path: &Path, input: &Input) -> InputDescriptor {
    InputDescriptor {
        path: Some(path.display().to_string()),
        kind: input.kind_name().to_string(),
    }
}

fn emit<T: serde::Serialize>(
    out: &mut impl Write,
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<(), CliError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => write!(out, "{}", text())?,
    }
    Ok(())
}

/// Runs a parsed command; returns the process exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32, CliError> {
    let opts = cli.options();
    let passed = match &cli.command {
        Command::Analyze { file } => {
            let input = load(file, cli.kind)?;
            let report = analyze_input(&input, descriptor(file, &input), &opts)?;
            emit(out, cli.format, &report, || text::analysis(&report))?;
            report.passed()
        }
        Command::Tensor {
            first,
            second,
            force,
        } => {
            let a = load(first, cli.kind)?;
            let b = load(second, cli.kind)?;
            let report = tensor(
                (&a, descriptor(first, &a)),
                (&b, descriptor(second, &b)),
                *force,
                &opts,
            )?;
            emit(out, cli.format, &report, || text::tensor(&report))?;
            report.passed()
        }
        Command::Freesum {
            first,
            second,
            output,
        } => {
            let polytope = |path: &PathBuf| -> Result<_, CliError> {
                match load(path, InputKind::Polytope)? {
                    Input::Polytope(p) => Ok(p),
                    Input::Spectrum(_) => unreachable!("loaded as polytope"),
                }
            };
            let (p, q) = (polytope(first)?, polytope(second)?);
            let sum = free_sum(&p, &q);
            let file = PolytopeFile::from(&sum);
            let json = serde_json::to_string_pretty(&file).map_err(std::io::Error::from)?;
            std::fs::write(output, json + "\n").map_err(|e| CliError::Usage {
                path: output.display().to_string(),
                message: e.to_string(),
            })?;
            emit(out, cli.format, &file, || {
                format!(
                    "wrote {} ({} vertices in dimension {})\n",
                    output.display(),
                    file.vertices.len(),
                    file.dim
                )
            })?;
            true
        }
        Command::Fuzz {
            seed,
            count,
            dim_max,
        } => {
            let summary = fuzz::run(*seed, *count, *dim_max, &opts);
            emit(out, cli.format, &summary, || text::fuzz(&summary))?;
            summary.failed == 0
        }
    };
    Ok(if passed {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILURE
    })
}
