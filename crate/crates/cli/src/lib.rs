//! Command-line driver for `ringq-core`: factorization, code inspection,
//! CSS parameter search, reproduction of the published tables and claim
//! audits, rendered as aligned tables or JSON lines.

pub mod commands;
pub mod published;
pub mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use ringq_core::{parse_poly, BinPoly, Error, ErrorCategory, Limits};

use report::{render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
/// `reproduce-paper` ran but some row did not match.
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ringq", version, about = "Cyclic codes over F2+vF2+v^2F2 and their CSS quantum codes")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct GlobalArgs {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    pub format: Format,
    /// Largest code (number of codewords) enumerated outright.
    #[arg(long, default_value_t = 1 << 24, global = true)]
    pub enum_cap: u64,
    /// Largest number of divisors of x^n+1 a search may visit.
    #[arg(long, default_value_t = ringq_core::factor::DEFAULT_DIVISOR_CAP, global = true)]
    pub divisor_cap: u64,
    /// Largest Gray-image length 3n checked for dual containment by rank.
    #[arg(long, default_value_t = 96, global = true)]
    pub rank_cap: usize,
}

impl GlobalArgs {
    pub fn limits(&self) -> Limits {
        Limits {
            enum_cap: self.enum_cap,
            divisor_cap: self.divisor_cap,
            rank_cap: self.rank_cap,
            ..Limits::default()
        }
    }
}

fn poly_arg(s: &str) -> Result<BinPoly, String> {
    parse_poly(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Factor x^n+1 over F2.
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Build <v f1, (1+v) f2, (1+v^2) f3> and report its parameters.
    Inspect {
        #[arg(long)]
        n: usize,
        /// Use the same polynomial for f1, f2 and f3.
        #[arg(long, value_parser = poly_arg, conflicts_with_all = ["f1", "f2", "f3"])]
        f: Option<BinPoly>,
        #[arg(long, value_parser = poly_arg, required_unless_present = "f")]
        f1: Option<BinPoly>,
        #[arg(long, value_parser = poly_arg, required_unless_present = "f")]
        f2: Option<BinPoly>,
        #[arg(long, value_parser = poly_arg, required_unless_present = "f")]
        f3: Option<BinPoly>,
    },
    /// Search divisor triples of x^n+1 for CSS codes.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        min_k: Option<i64>,
        #[arg(long)]
        equal_triples_only: bool,
        #[arg(long)]
        max_results: Option<usize>,
        /// Also evaluate triples failing the polynomial dual-containment test.
        #[arg(long)]
        include_non_dual_containing: bool,
    },
    /// Recompute the nine published [[N,K,D]] parameter sets.
    ReproducePaper,
    /// Audit structural claims on small codes.
    Audit {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e.category() {
        ErrorCategory::Input => EXIT_USAGE,
        ErrorCategory::ResourceCap => EXIT_RESOURCE,
        ErrorCategory::Precondition => EXIT_PRECONDITION,
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let limits = cli.global.limits();
    let mut status = EXIT_OK;
    let lines = match &cli.command {
        Command::Factor { n } => commands::factor(*n, &limits),
        Command::Inspect { n, f, f1, f2, f3 } => {
            let pick = |g: &Option<BinPoly>| g.clone().or_else(|| f.clone()).expect("clap requires it");
            commands::inspect(*n, &pick(f1), &pick(f2), &pick(f3), &limits)
        }
        Command::Search {
            n,
            min_k,
            equal_triples_only,
            max_results,
            include_non_dual_containing,
        } => commands::search(
            &commands::SearchArgs {
                n: *n,
                min_k: *min_k,
                equal_only: *equal_triples_only,
                max_results: *max_results,
                require_dual_containing: !include_non_dual_containing,
            },
            &limits,
        ),
        Command::ReproducePaper => {
            let (lines, ok) = commands::reproduce_published(&limits);
            if !ok {
                status = EXIT_MISMATCH;
            }
            Ok(lines)
        }
        Command::Audit { n_max } => commands::audit(*n_max, &limits),
    };
    match lines {
        Ok(lines) => {
            if let Err(e) = render(&lines, cli.global.format, out) {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
