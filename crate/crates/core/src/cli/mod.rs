//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 state-file parse error,
//! 3 numeric-invariant violation.

mod measure;
mod reproduce;
mod selftest;
mod svg;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use measure::{parse_family, run_measure, MeasureInput};
pub use reproduce::{reproduce, Figure};
pub use selftest::{run_selftest, PropertyResult};
pub use svg::line_plot;

use crate::measures::Measure;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

/// Parsed command line.
#[derive(Debug, Parser)]
#[command(name = "sharpgm", version, about = "Sharp geometric entanglement measures")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate measures on a named family state or a state file.
    Measure {
        /// bell, ghzN, wN, beta:r=<x>, chi1:theta=<x>, chi2:theta=<x>, chi3:theta=<x>
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        family: Option<String>,
        /// Plain-text state file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Measure name; repeatable.
        #[arg(long = "measure")]
        measures: Vec<Measure>,
        /// Comma-separated block-A subsystem indices.
        #[arg(long)]
        bipartition: Option<String>,
        /// Directory for `measure.csv` (and the SGM witness state).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the CSV and SVG outputs behind a figure.
    Reproduce {
        #[arg(value_enum)]
        figure: FigureArg,
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Grid size override (see README for per-figure meaning).
        #[arg(long)]
        grid: Option<usize>,
    },
    /// Run the randomized invariant suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Fig6,
    All,
}

impl FigureArg {
    fn figures(self) -> Vec<Figure> {
        match self {
            FigureArg::Fig2 => vec![Figure::Fig2],
            FigureArg::Fig3 => vec![Figure::Fig3],
            FigureArg::Fig4 => vec![Figure::Fig4],
            FigureArg::Fig5 => vec![Figure::Fig5],
            FigureArg::Fig6 => vec![Figure::Fig6],
            FigureArg::All => Figure::ALL.to_vec(),
        }
    }
}

/// Failure of a command, mapped onto an exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Numeric(_) => EXIT_NUMERIC,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("I/O error: {e}"))
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        match e {
            crate::Error::Parse { .. } => CliError::Parse(e.to_string()),
            crate::Error::InvalidSubsystems(_)
            | crate::Error::OutOfDomain { .. }
            | crate::Error::WrongShape(_)
            | crate::Error::DimensionMismatch(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numeric(e.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name), writing to stdout
/// and stderr. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut stdout = std::io::stdout().lock();
    match execute(&config, &mut stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Executes a parsed configuration, writing human-readable output to `w`.
pub fn execute(config: &RunConfig, w: &mut dyn std::io::Write) -> Result<(), CliError> {
    match &config.command {
        Command::Measure {
            family,
            file,
            measures,
            bipartition,
            out,
        } => {
            let input = match (family, file) {
                (Some(f), _) => MeasureInput::Family(f.clone()),
                (None, Some(p)) => MeasureInput::File(p.clone()),
                (None, None) => return Err(CliError::Usage("need --family or --file".into())),
            };
            run_measure(&input, measures, bipartition.as_deref(), out.as_deref(), w)
        }
        Command::Reproduce { figure, out, grid } => {
            std::fs::create_dir_all(out)?;
            for fig in figure.figures() {
                let written = reproduce(fig, out, *grid)?;
                for p in written {
                    writeln!(w, "wrote {}", p.display())?;
                }
            }
            Ok(())
        }
        Command::Selftest { seed } => {
            let results = run_selftest(*seed);
            let mut failed = 0;
            for r in &results {
                writeln!(w, "[{}] {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail)?;
                failed += usize::from(!r.passed);
            }
            writeln!(w, "{} of {} properties passed", results.len() - failed, results.len())?;
            if failed > 0 {
                return Err(CliError::Numeric(format!("{failed} properties failed")));
            }
            Ok(())
        }
    }
}
