//! Command-line driver. Exit codes: 0 on success, 2 on usage or input
//! errors, 3 when a verification or table row disagrees with the closed forms.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructions::{max_witnesses, min_witnesses};
use crate::error::Error;
use crate::extremal::{enumerate_class, enumerate_group, figure1_table, length_oracle_clause, verify, ScanOptions};
use crate::metrics::{distance, length_b, MetricKind};
use crate::peaks::{peak_set, PeakSet};
use crate::perm::SignedPermutation;
use crate::report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "signed-peaks", version, about = "Signed permutations, peak sets and extremal distances")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Parallelism {
    /// Allow the n = 6 exhaustive scans.
    #[arg(long)]
    pub long_run: bool,
    /// Worker threads (default: all available).
    #[arg(long)]
    pub threads: Option<usize>,
}

impl From<Parallelism> for ScanOptions {
    fn from(p: Parallelism) -> Self {
        ScanOptions { long_run: p.long_run, threads: p.threads }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the peak set of a permutation.
    Peaks {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Distance between two permutations.
    Dist {
        #[arg(long)]
        metric: MetricKind,
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Coxeter length.
    Length {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Group inverse.
    Invert {
        #[arg(allow_hyphen_values = true)]
        perm: String,
    },
    /// Product LEFT∘RIGHT.
    Compose {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Brute-force extremal table for every admissible peak set.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        parallel: Parallelism,
    },
    /// Check every closed-form extreme by exhaustive search.
    Verify {
        #[arg(long)]
        n: usize,
        /// Also compare breadth-first word lengths with the inversion statistic.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        parallel: Parallelism,
    },
    /// Print a constructed pair attaining an extreme.
    Witness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        peak_set: String,
        #[arg(long)]
        metric: MetricKind,
        #[arg(long, value_enum)]
        extreme: Extreme,
    },
    /// List all elements of the group, or of one peak class.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        peak_set: Option<String>,
    },
}

enum Failure {
    Input(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn perm(text: &str) -> Result<SignedPermutation, Error> {
    text.parse()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure::Input(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Peaks { perm: p } => {
            writeln!(out, "{}", peak_set(&perm(&p)?))?;
        }
        Command::Dist { metric, first, second } => {
            writeln!(out, "{}", distance(metric, &perm(&first)?, &perm(&second)?)?)?;
        }
        Command::Length { perm: p } => {
            writeln!(out, "{}", length_b(&perm(&p)?))?;
        }
        Command::Invert { perm: p } => {
            writeln!(out, "{}", perm(&p)?.inverse())?;
        }
        Command::Compose { left, right } => {
            writeln!(out, "{}", perm(&left)?.compose(&perm(&right)?)?)?;
        }
        Command::Table { n, format, output, parallel } => {
            let reports = figure1_table(n, &parallel.into())?;
            let payload = match format {
                Format::Text => report::to_text(n, &reports),
                Format::Csv => report::to_csv(&reports),
                Format::Json => report::to_json(n, &reports),
            };
            match output {
                Some(path) => std::fs::write(path, payload)?,
                None => out.write_all(payload.as_bytes())?,
            }
            if let Some(bad) = reports.iter().find(|r| !r.agrees) {
                writeln!(
                    err,
                    "mismatch: n={} {} {}: observed ({}, {}) predicted ({}, {})",
                    bad.n, bad.scope, bad.metric, bad.observed_min, bad.observed_max, bad.predicted_min, bad.predicted_max
                )?;
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Verify { n, oracle, parallel } => {
            let mut v = verify(n, &parallel.into())?;
            if oracle {
                let oracle_cap = if parallel.long_run { 5 } else { 4 };
                if n <= oracle_cap {
                    v.clauses.push(length_oracle_clause(n)?);
                } else {
                    writeln!(out, "SKIP BFS length oracle: n = {n} exceeds {oracle_cap} (use --long-run for 5)")?;
                }
            }
            for c in &v.clauses {
                writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
            }
            let failed = v.clauses.iter().filter(|c| !c.passed).count();
            writeln!(out, "n = {n}: {} clauses, {failed} failed", v.clauses.len())?;
            if let Some(first) = v.first_failure() {
                writeln!(err, "first failure: {}: {}", first.name, first.detail)?;
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Witness { n, peak_set: text, metric, extreme } => {
            let set = PeakSet::parse(&text, n)?;
            let (a, b) = match extreme {
                Extreme::Min => min_witnesses(&set)?.pair(metric),
                Extreme::Max => max_witnesses(&set, metric)?,
            };
            writeln!(out, "{a}\n{b}\n{}", distance(metric, &a, &b)?)?;
        }
        Command::Enumerate { n, peak_set: text } => {
            let items: Box<dyn Iterator<Item = SignedPermutation>> = match text {
                Some(t) => Box::new(enumerate_class(&PeakSet::parse(&t, n)?)?),
                None => Box::new(enumerate_group(n)?),
            };
            for p in items {
                writeln!(out, "{p}")?;
            }
        }
    }
    Ok(EXIT_OK)
}
