//! The `ci-metrics` command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 data validation error,
//! 4 numeric domain error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{curves_csv, emit_curves, emit_reports, load_profiles, OutputFormat, ProfileFormat};
use crate::core_indices::{Conventions, GConvention, HCoreRule, IndexReport};
use crate::distortion::DistortionSpec;
use crate::error::Error;
use crate::ranking::{rank_with, DEFAULT_TOLERANCE};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ci-metrics", version, about = "Choquet-integral citation indices and researcher ranking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute every index for each profile in a file.
    Index {
        #[command(flatten)]
        input: InputArgs,
        /// Output format: table, json or csv.
        #[arg(long, default_value = "table")]
        out: OutputFormat,
    },
    /// Rank the profiles in a file by (CI_h, CI_g, CI_N).
    Rank {
        #[command(flatten)]
        input: InputArgs,
        /// Relative tolerance for treating two indices as equal.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// List the best researcher first.
        #[arg(long)]
        best_first: bool,
    },
    /// Print a distortion curve and its rank weights as CSV.
    Curves {
        /// Distortion, e.g. `power:a=0.5` or `beta:a=0.5,b=2`.
        #[arg(long)]
        distortion: String,
        /// Number of rank weights.
        #[arg(long, default_value_t = 10)]
        ranks: usize,
        /// Number of grid intervals on [0, 1].
        #[arg(long, default_value_t = 100)]
        grid: usize,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Profile file (CSV or JSON).
    #[arg(long)]
    input: PathBuf,
    /// Input format; inferred from the extension when omitted.
    #[arg(long)]
    format: Option<ProfileFormat>,
    /// Distortion, e.g. `power:a=0.5` or `beta:a=0.5,b=2`.
    #[arg(long)]
    distortion: String,
    /// Cap the g-index at the number of papers.
    #[arg(long)]
    g_capped: bool,
    /// Put every paper with at least h citations in the h-core, not just
    /// those tied with the h-th paper.
    #[arg(long)]
    h_core_at_least_h: bool,
}

impl InputArgs {
    fn conventions(&self) -> Conventions {
        Conventions {
            h_core: if self.h_core_at_least_h {
                HCoreRule::AtLeastH
            } else {
                HCoreRule::TiedWithHth
            },
            g: if self.g_capped {
                GConvention::Capped
            } else {
                GConvention::Unbounded
            },
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Error> {
    let text = match command {
        Command::Index { input, out: format } => {
            let spec: DistortionSpec = input.distortion.parse()?;
            let profiles = load_profiles(&input.input, input.format)?;
            let reports: Vec<IndexReport> = profiles
                .iter()
                .map(|p| IndexReport::compute_with(p, &spec, input.conventions()))
                .collect();
            emit_reports(&reports, format)
        }
        Command::Rank {
            input,
            tol,
            best_first,
        } => {
            let spec: DistortionSpec = input.distortion.parse()?;
            let profiles = load_profiles(&input.input, input.format)?;
            let result = rank_with(&profiles, &spec, tol, input.conventions())?;
            let mut text = format!(
                "distortion: {}  tolerance: {}\n{}\n\n",
                result.distortion(),
                result.tolerance(),
                result.chain(best_first)
            );
            let steps: Vec<_> = if best_first {
                result.steps().iter().rev().collect()
            } else {
                result.steps().iter().collect()
            };
            for step in steps {
                let o = step.outcome;
                let line = if best_first {
                    // compare(upper, lower) fires the odd rule one below
                    format!("{} ≻ {}  rule {}  margin {:.6}\n", step.upper, step.lower, o.deciding_rule - 1, o.margin)
                } else {
                    format!("{} ≺ {}  rule {}  margin {:.6}\n", step.lower, step.upper, o.deciding_rule, o.margin)
                };
                text.push_str(&line);
            }
            text.push('\n');
            text.push_str(&emit_reports(result.reports(), OutputFormat::Table));
            text
        }
        Command::Curves {
            distortion,
            ranks,
            grid,
        } => {
            let spec: DistortionSpec = distortion.parse()?;
            let (curve, bars) = emit_curves(&spec, ranks, grid)?;
            curves_csv(&[curve, bars])
        }
    };
    out.write_all(text.as_bytes()).map_err(|source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    })
}
