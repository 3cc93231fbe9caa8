//! The `sma` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 no such array exists,
//! 3 verification failed.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::checker::{verify_same_row_pairs, verify_shiftable, verify_sma, VerificationReport};
use crate::composer::{generate, plan};
use crate::error::Error;
use crate::fixtures::{self, Fixture};
use crate::format::{self, GridFormat};
use crate::grid::SignedArray;
use crate::heffter::{mirror_concat, verify_heffter};
use crate::oracle::{search_n2, search_tiny};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NONEXISTENT: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "sma", version, about = "Build and check tight signed magic arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

impl From<OutFormat> for GridFormat {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Csv => GridFormat::Csv,
            OutFormat::Json => GridFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Sma,
    SameRow,
    Shiftable,
    Heffter,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an SMA(m, n) with each ±x in one row.
    Generate {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a grid file.
    Verify {
        /// Grid file (CSV or JSON), `-` for stdin, or `fixture:<name>`.
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "sma")]
        check: Vec<Check>,
    },
    /// Add k to every magnitude.
    Shift {
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        by: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Concatenate a Heffter grid with its negation.
    Mirror {
        #[arg(long = "in")]
        input: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Show which construction generate would use.
    Plan {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Exhaustive search: sign vectors when --cols is omitted, cell placement otherwise.
    Oracle {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: Option<usize>,
        #[arg(long)]
        same_row: bool,
    },
}

/// Runs the CLI against explicit streams and returns the exit code.
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
                _ => EXIT_USAGE,
            };
            let target: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            match e {
                Error::Nonexistent { .. } => EXIT_NONEXISTENT,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn read_input(source: &str) -> Result<SignedArray, Error> {
    let (text, path) = if source == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
        (s, None)
    } else if let Some(name) = source.strip_prefix("fixture:") {
        let text = match fixtures::override_dir() {
            Some(dir) => {
                let p = dir.join(format!("{}.csv", name.trim_end_matches(".csv")));
                fs::read_to_string(&p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?
            }
            None => Fixture::by_name(name)
                .ok_or_else(|| Error::Parse(format!("unknown fixture {name:?}")))?
                .csv()
                .to_string(),
        };
        (text, None)
    } else {
        let p = Path::new(source);
        let text = fs::read_to_string(p).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
        (text, Some(p))
    };
    let a = format::parse(&text, GridFormat::detect(path, &text))?;
    if let Some((row, col)) = a.find_zero() {
        return Err(Error::ZeroEntry { row: row + 1, col: col + 1 });
    }
    Ok(a)
}

fn emit(a: &SignedArray, fmt: OutFormat, dest: Option<&Path>, out: &mut dyn Write) -> Result<i32, Error> {
    let text = format::serialize(a, fmt.into());
    match dest {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes()).map_err(|e| Error::Parse(e.to_string()))?,
    }
    Ok(EXIT_OK)
}

fn execute(cmd: Command, out: &mut dyn Write, _err: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: io::Error| Error::Parse(e.to_string());
    match cmd {
        Command::Generate { rows, cols, format, out: dest } => {
            let a = generate(rows, cols)?;
            emit(&a, format, dest.as_deref(), out)
        }
        Command::Verify { input, check } => {
            let a = read_input(&input)?;
            let wanted: Vec<Check> = if check.contains(&Check::All) {
                vec![Check::Sma, Check::SameRow, Check::Shiftable, Check::Heffter]
            } else {
                check
            };
            let mut all = VerificationReport::default();
            for c in wanted {
                let (name, report) = match c {
                    Check::Sma => ("sma", verify_sma(&a)),
                    Check::SameRow => ("same-row", verify_same_row_pairs(&a)),
                    Check::Shiftable => ("shiftable", verify_shiftable(&a)?),
                    Check::Heffter => ("heffter", verify_heffter(&a)),
                    Check::All => unreachable!("expanded above"),
                };
                let verdict = if report.passed() { "pass" } else { "fail" };
                writeln!(out, "check\t{name}\t{verdict}").map_err(io)?;
                all = all.merge(report);
            }
            for v in &all.violations {
                writeln!(out, "{v}").map_err(io)?;
            }
            Ok(if all.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
        }
        Command::Shift { input, by, format, out: dest } => {
            let a = read_input(&input)?.shift(by)?;
            emit(&a, format, dest.as_deref(), out)
        }
        Command::Mirror { input, format, out: dest } => {
            let a = mirror_concat(&read_input(&input)?)?;
            emit(&a, format, dest.as_deref(), out)
        }
        Command::Plan { rows, cols } => {
            writeln!(out, "{}", plan(rows, cols)?).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Oracle { rows, cols, same_row } => {
            let outcome = match cols {
                None => search_n2(rows)?,
                Some(n) => search_tiny(rows, n, same_row)?,
            };
            writeln!(out, "{}", if outcome.found { "found" } else { "not found" }).map_err(io)?;
            writeln!(out, "nodes_explored={}", outcome.nodes_explored).map_err(io)?;
            if let Some(w) = &outcome.witness {
                out.write_all(format::to_csv(w).as_bytes()).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
    }
}
