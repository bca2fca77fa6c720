//! The `tablecount` command line.
//!
//! ```text
//! tablecount count   --mode binary|natural (--file PATH | --rows TERMS --cols TERMS) [--stats]
//! tablecount sample  --mode binary|natural (--file PATH | --rows TERMS --cols TERMS)
//!                    [--seed N] [--num K] [--format csv|jsonl]
//! tablecount ehrhart --n N [--values-only] [--force]
//! ```
//!
//! Exit codes: `0` success, `1` input error, `2` sampling from an empty set.

mod margin_file;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use margin_file::{parse_margin_file, parse_terms, ParseError, RunLength, MAX_RUN};

use crate::ehrhart::{self, SUPPORTED_MAX_N};
use crate::enumerate::{count, Mode};
use crate::error::Error;
use crate::margins::MarginSpec;
use crate::sample::{RandomSource, SamplerContext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "tablecount", version, about = "Exact counting and uniform sampling of matrices with given row and column sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the exact number of matrices with the given margins.
    Count {
        #[command(flatten)]
        margins: MarginArgs,
        /// Report memo size, term count and elapsed time on stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Draw matrices uniformly at random.
    Sample {
        #[command(flatten)]
        margins: MarginArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        num: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Count n x n magic squares and fit the Ehrhart polynomial of the
    /// Birkhoff polytope.
    Ehrhart {
        #[arg(long = "n")]
        n: usize,
        /// Only print the directly counted values.
        #[arg(long)]
        values_only: bool,
        /// Allow n beyond the tested range.
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Args)]
struct MarginArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Margin file with `rows:` and `cols:` lines.
    #[arg(long, conflicts_with_all = ["rows", "cols"], required_unless_present_all = ["rows", "cols"])]
    file: Option<PathBuf>,
    /// Row sums, e.g. "2 2 1 1" or "5^6 4^10".
    #[arg(long, requires = "cols")]
    rows: Option<String>,
    /// Column sums.
    #[arg(long, requires = "rows")]
    cols: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Binary,
    Natural,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Binary => Mode::Binary,
            ModeArg::Natural => Mode::Natural,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Jsonl,
}

impl MarginArgs {
    fn load(&self) -> Result<MarginSpec, String> {
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            return parse_margin_file(&text).map_err(|e| format!("{}: {e}", path.display()));
        }
        let rows = parse_terms(self.rows.as_deref().unwrap_or_default(), 1).map_err(|e| format!("--rows: {e}"))?;
        let cols = parse_terms(self.cols.as_deref().unwrap_or_default(), 1).map_err(|e| format!("--cols: {e}"))?;
        Ok(MarginSpec::new(rows, cols))
    }
}

/// Runs the command line with explicit output streams and returns the exit
/// code. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<i32> {
    match command {
        Command::Count { margins, stats } => {
            let spec = match margins.load() {
                Ok(s) => s,
                Err(msg) => return input_error(err, &msg),
            };
            let (n, table) = count(&spec, margins.mode.into());
            writeln!(out, "{n}")?;
            if stats {
                let s = table.stats();
                writeln!(err, "nodes: {}", s.nodes)?;
                writeln!(err, "terms: {}", s.terms)?;
                writeln!(err, "pruned: {}", s.pruned)?;
                writeln!(err, "elapsed_ms: {}", s.elapsed.as_millis())?;
            }
            Ok(EXIT_OK)
        }
        Command::Sample {
            margins,
            seed,
            num,
            format,
        } => {
            let spec = match margins.load() {
                Ok(s) => s,
                Err(msg) => return input_error(err, &msg),
            };
            let ctx = match SamplerContext::prepare(&spec, margins.mode.into()) {
                Ok(ctx) => ctx,
                Err(Error::Infeasible) => {
                    writeln!(err, "error: {}", Error::Infeasible)?;
                    return Ok(EXIT_INFEASIBLE);
                }
                Err(e) => return input_error(err, &e.to_string()),
            };
            let mut rng = RandomSource::seed_from_u64(seed);
            for i in 0..num {
                let m = ctx.draw(&mut rng);
                match format {
                    Format::Csv => {
                        if i > 0 {
                            writeln!(out)?;
                        }
                        for row in &m {
                            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
                            writeln!(out, "{}", cells.join(","))?;
                        }
                    }
                    Format::Jsonl => {
                        writeln!(out, "{}", serde_json::to_string(&m).map_err(io::Error::other)?)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Ehrhart {
            n,
            values_only,
            force,
        } => {
            if n < 2 {
                return input_error(err, "--n must be at least 2");
            }
            if n > SUPPORTED_MAX_N && !force {
                return input_error(
                    err,
                    &format!("--n {n} is beyond the tested range 2..={SUPPORTED_MAX_N}; pass --force to run anyway"),
                );
            }
            let k = ehrhart::direct_values(n);
            let direct = ehrhart::h_values(n, 0..=k as u32);
            for (r, v) in direct.iter().enumerate().skip(1) {
                writeln!(out, "H_{n}({r}) = {v}")?;
            }
            if !values_only {
                let v = ehrhart::stanley_vector_from(n, &direct);
                let poly = ehrhart::solve_coefficients(&v);
                for (j, c) in poly.coefficients().iter().enumerate() {
                    writeln!(out, "r^{j}: {}/{}", c.numer(), c.denom())?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn input_error(err: &mut dyn Write, msg: &str) -> io::Result<i32> {
    writeln!(err, "error: {msg}")?;
    Ok(EXIT_INPUT)
}
