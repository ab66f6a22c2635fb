//! Command-line front end: build posets of labeled partitions, verify the
//! EL-labeling, count decreasing chains and reproduce the sphere counts.
//!
//! Exit status: 0 on success or agreement, 1 on a verified disagreement or
//! EL failure, 2 on usage errors (reported as JSON on stderr).

mod commands;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use sigma_posets::formulas::{TableCase, TableRow, Variant};
use sigma_posets::partition::{PosetType, SignSet};

#[derive(Parser, Debug)]
#[command(
    name = "sigma-posets",
    version,
    about = "Posets of sign-labeled partitions"
)]
struct Cli {
    /// Worker threads for interval checks and homology ranks.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the poset as JSON or DOT.
    Build {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the edge labeling on every interval and print a certificate.
    VerifyEl {
        #[command(flatten)]
        poset: PosetArgs,
        /// Stop after roughly this many intervals.
        #[arg(long)]
        max_intervals: Option<u64>,
        /// Seconds after which remaining intervals are skipped.
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Count decreasing maximal chains from bottom to top by enumeration.
    CountDecreasing {
        #[command(flatten)]
        poset: PosetArgs,
        /// Repeat the count under every ordering of the signs.
        #[arg(long)]
        all_orders: bool,
        /// Repeat the count under this many random orderings.
        #[arg(long, conflicts_with = "all_orders")]
        sample_orders: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the decreasing chains instead of their number.
        #[arg(long)]
        list: bool,
    },
    /// Evaluate the decreasing-chain sum over partitions of [n].
    Formula {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, value_enum, default_value_t = Method::Shapes)]
        method: Method,
        /// Also enumerate the poset and compare.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Reproduce the table of sphere counts.
    Table {
        #[arg(long, value_parser = parse_case, default_value = "toric")]
        case: TableCase,
        #[arg(long, value_delimiter = ',', value_parser = parse_row, default_value = "A,B,C,D")]
        rows: Vec<TableRow>,
        #[arg(long, value_parser = parse_range, default_value = "1..8")]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Largest n whose posets are also enumerated.
        #[arg(long, default_value_t = 3)]
        enumerate_max_n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
        max_elements: usize,
    },
    /// Count (and optionally list) increasing, flourishing or blooming trees.
    Trees {
        #[arg(long, value_enum)]
        family: TreeFamily,
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// r for flourishing trees, q for blooming trees.
        #[arg(long, value_parser = parse_range, default_value = "0")]
        param: RangeInclusive<usize>,
        /// Largest n whose trees are also enumerated.
        #[arg(long, default_value_t = 7)]
        enumerate_max_n: usize,
        /// Print every tree in the canonical encoding.
        #[arg(long)]
        list: bool,
    },
    /// Reduced Betti numbers of the order complex of the proper part.
    Betti {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, default_value_t = sigma_posets::complex::DEFAULT_FACE_CAP)]
        face_cap: usize,
    },
    /// Characteristic polynomial.
    Charpoly {
        #[command(flatten)]
        poset: PosetArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

const DEFAULT_MAX_ELEMENTS: usize = 5000;

#[derive(Args, Debug, Clone)]
struct PosetArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long = "type", value_parser = parse_type, default_value = "C")]
    kind: PosetType,
    /// Distinguished sign for type B (defaults to the largest sign).
    #[arg(long)]
    distinguished: Option<usize>,
    /// Signs from least to greatest, e.g. 1,0.
    #[arg(long, value_delimiter = ',')]
    sign_order: Option<Vec<usize>>,
    #[arg(long, default_value_t = DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,
}

impl PosetArgs {
    fn signs(&self) -> sigma_posets::Result<SignSet> {
        let mut signs = SignSet::new(self.m)?;
        if let Some(order) = &self.sign_order {
            signs = signs.with_order(order)?;
        }
        if let Some(d) = self.distinguished {
            signs = signs.with_distinguished(d)?;
        }
        Ok(signs)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
    Markdown,
    Dot,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Shapes,
    BlockCounts,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum TreeFamily {
    Increasing,
    Flourishing,
    Blooming,
}

fn parse_type(s: &str) -> Result<PosetType, String> {
    s.parse().map_err(|e: sigma_posets::Error| e.to_string())
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse().map_err(|e: sigma_posets::Error| e.to_string())
}

fn parse_case(s: &str) -> Result<TableCase, String> {
    s.parse().map_err(|e: sigma_posets::Error| e.to_string())
}

fn parse_row(s: &str) -> Result<TableRow, String> {
    s.parse().map_err(|e: sigma_posets::Error| e.to_string())
}

/// `a..b` (inclusive) or a single number.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok(a..=b)
        }
        None => {
            let a: usize = s.trim().parse().map_err(|_| bad())?;
            Ok(a..=a)
        }
    }
}

/// Why a command stopped without a normal result.
#[derive(Debug)]
enum Failure {
    /// Bad flags or parameters the library rejects.
    Usage(String),
    /// A size or face budget was hit.
    Budget(String),
}

impl From<sigma_posets::Error> for Failure {
    fn from(e: sigma_posets::Error) -> Self {
        use sigma_posets::Error::*;
        match e {
            ElementCapExceeded(_) | FaceCapExceeded(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Whether everything checked agreed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Agree,
    Disagree,
}

fn report(kind: &str, message: &str) {
    eprintln!(
        "{}",
        serde_json::json!({ "error": kind, "message": message })
    );
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = e.print();
                    ExitCode::SUCCESS
                }
                _ => {
                    report("usage", e.to_string().trim());
                    ExitCode::from(2)
                }
            };
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            report("usage", "--threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("thread pool is configured once");
    }
    let mut out = String::new();
    let result = commands::run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(Outcome::Agree) => ExitCode::SUCCESS,
        Ok(Outcome::Disagree) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            report("usage", &message);
            ExitCode::from(2)
        }
        Err(Failure::Budget(message)) => {
            report("budget", &message);
            ExitCode::from(2)
        }
    }
}
