//! `sphorb`: command-line front end for the verification engine.
//!
//! Exit status is 0 when every check passes, 1 on a verification failure and
//! 2 on a usage error.

mod report;
mod suites;
mod tables;

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sphorb::orbitcat::{catalog, OrbitDescriptor};

use report::{Parameters, VerificationReport};
use suites::{Suite, SuiteInput};
use tables::{Rendered, Table};

const MIN_N: usize = 4;

/// Inclusive range of `n`, written `8`, `4..10` or `4..=10`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct NRange(RangeInclusive<usize>);

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("'{t}' is not a non-negative integer"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo < MIN_N {
            return Err(format!("n must be at least {MIN_N}, got {lo}"));
        }
        if hi < lo {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange(lo..=hi))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "sphorb",
    version,
    about = "Exact checks for spherical nilpotent orbits of SL(n,R)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Selection {
    /// Value or inclusive range of n, e.g. `8` or `4..10`.
    #[arg(short = 'n', long = "n-range", default_value = "4..10")]
    n_range: NRange,
    /// Restrict to one order k.
    #[arg(short = 'k', long)]
    k: Option<usize>,
    /// Restrict to one sign (only meaningful when n = 2k).
    #[arg(long, allow_hyphen_values = true, value_parser = parse_epsilon)]
    epsilon: Option<i8>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn parse_epsilon(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" | "+" => Ok(1),
        "-1" | "-" => Ok(-1),
        _ => Err(format!("epsilon must be +1 or -1, got '{s}'")),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the orbit catalog with partitions, dimensions and representatives.
    Orbits(Selection),
    /// Print the centralizer decomposition of each representative.
    Stab(Selection),
    /// Render the Duflo parameter table (same as `table cor4.3`).
    Classify(Selection),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        selection: Selection,
        /// Seed for the randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Last series coefficient index checked by `series7.2`.
        #[arg(long, default_value_t = 12)]
        rmax: usize,
        /// Print elapsed time on stderr (never part of the report).
        #[arg(long)]
        timing: bool,
    },
    /// Render a named table.
    Table {
        #[arg(value_enum)]
        name: Table,
        #[command(flatten)]
        selection: Selection,
    },
}

fn select(sel: &Selection) -> Result<Vec<OrbitDescriptor>, String> {
    let out: Vec<OrbitDescriptor> = sel
        .n_range
        .0
        .clone()
        .flat_map(catalog)
        .filter(|d| sel.k.is_none_or(|k| d.k == k))
        .filter(|d| sel.epsilon.is_none_or(|e| d.eps == e || 2 * d.k < d.n))
        .collect();
    if out.is_empty() {
        return Err(format!(
            "no orbit matches n in {}..={}{}{}",
            sel.n_range.0.start(),
            sel.n_range.0.end(),
            sel.k.map(|k| format!(", k={k}")).unwrap_or_default(),
            sel.epsilon
                .map(|e| format!(", eps={e:+}"))
                .unwrap_or_default()
        ));
    }
    Ok(out)
}

fn emit(r: Rendered, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", r.text),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&r.json).expect("json value")
        ),
    }
    if r.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Orbits(sel) => match select(&sel) {
            Ok(cases) => emit(tables::orbits(&cases), sel.format),
            Err(e) => usage_error(&e),
        },
        Command::Stab(sel) => match select(&sel) {
            Ok(cases) => emit(tables::stab(&cases), sel.format),
            Err(e) => usage_error(&e),
        },
        Command::Classify(sel) => match select(&sel) {
            Ok(cases) => emit(tables::render(Table::Cor43, &cases), sel.format),
            Err(e) => usage_error(&e),
        },
        Command::Table { name, selection } => match select(&selection) {
            Ok(cases) => emit(tables::render(name, &cases), selection.format),
            Err(e) => usage_error(&e),
        },
        Command::Verify {
            suite,
            selection,
            seed,
            rmax,
            timing,
        } => {
            let cases = match select(&selection) {
                Ok(c) => c,
                Err(e) => return usage_error(&e),
            };
            let start = Instant::now();
            let out = suites::run(
                suite,
                &SuiteInput {
                    orbits: &cases,
                    seed,
                    rmax,
                },
            );
            let params = Parameters {
                n_min: *selection.n_range.0.start(),
                n_max: *selection.n_range.0.end(),
                k: selection.k,
                epsilon: selection.epsilon,
                seed,
                rmax,
            };
            let report = VerificationReport::new(suite.name(), params, out.cases, out.skipped);
            if timing {
                eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
            }
            match selection.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("serializable report")
                ),
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
