//! `slope-audit`: command-line front end.
//!
//! Exit codes: 0 on success (whatever the claim verdicts), 1 on I/O
//! failure, 2 on invalid parameters, 3 when the tolerance is too coarse.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use slope_audit::audit::{
    audit_grid, audit_instance, audit_triple, brute_force_search, default_epsilon,
    diagonal_check, reduce_exponent, render_grid, render_json, render_report, render_triple,
    Format, GridOutcome,
};
use slope_audit::family::{FamilyParams, FermatTriple};
use slope_audit::numerics::parse_rational;
use slope_audit::{Error, Rational};

#[derive(Parser)]
#[command(name = "slope-audit", version, about = "Exact audit of the Fermat slope polynomial family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Audit one (p, u) instance
    Instance {
        #[arg(long)]
        p: u32,
        /// u as num/den, strictly between 0 and 1
        #[arg(long, value_parser = rational_arg)]
        u: Rational,
        #[arg(long, value_parser = rational_arg)]
        epsilon: Option<Rational>,
        #[arg(long, default_value = "json", value_parser = format_arg)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit u = i/(u_count+1) for each listed prime
    Grid {
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long)]
        u_count: u32,
        #[arg(long, value_parser = rational_arg)]
        epsilon: Option<Rational>,
        /// Directory for grid.json plus one file per instance
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relate a candidate triple to the slope family
    Triple {
        #[arg(long)]
        x: BigInt,
        #[arg(long)]
        y: BigInt,
        #[arg(long)]
        z: BigInt,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value = "json", value_parser = format_arg)]
        format: Format,
    },
    /// Exhaustive search of x^p + y^p = z^p up to a bound
    Search {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        max: u64,
    },
    /// Reduce an exponent to an odd prime (or 4)
    Reduce {
        #[arg(long)]
        n: u64,
    },
    /// Test 2 x^n for perfect n-th powers
    Diagonal {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        max: u64,
    },
}

fn rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn format_arg(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Audit(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Audit(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn emit(bytes: &[u8], out: Option<&Path>) -> io::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes),
        None => io::stdout().lock().write_all(bytes),
    }
}

fn instance_file_name(p: u32, u: &Rational) -> String {
    format!("p{p}_u{}-{}.json", u.numer(), u.denom())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Instance {
            p,
            u,
            epsilon,
            format,
            out,
        } => {
            let params = FamilyParams::new(p, u)?;
            let eps = epsilon.unwrap_or_else(default_epsilon);
            let report = audit_instance(&params, &eps)?;
            emit(&render_report(&report, format), out.as_deref())?;
        }
        Command::Grid {
            p,
            u_count,
            epsilon,
            out,
        } => {
            let eps = epsilon.unwrap_or_else(default_epsilon);
            let entries = audit_grid(&p, u_count, &eps)?;
            match out {
                None => emit(&render_grid(&entries), None)?,
                Some(dir) => {
                    fs::create_dir_all(&dir)?;
                    fs::write(dir.join("grid.json"), render_grid(&entries))?;
                    for e in &entries {
                        let bytes = match &e.outcome {
                            GridOutcome::Report(r) => render_report(r, Format::Json),
                            GridOutcome::Error(_) => render_json(e),
                        };
                        fs::write(dir.join(instance_file_name(e.p, &e.u)), bytes)?;
                    }
                }
            }
        }
        Command::Triple { x, y, z, p, format } => {
            let t = FermatTriple::new(x, y, z, p)?;
            emit(&render_triple(&audit_triple(&t)?, format), None)?;
        }
        Command::Search { p, max } => {
            emit(&render_json(&brute_force_search(p, max)?), None)?;
        }
        Command::Reduce { n } => {
            emit(&render_json(&reduce_exponent(n)?), None)?;
        }
        Command::Diagonal { n, max } => {
            emit(&render_json(&diagonal_check(n, max)?), None)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Audit(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Tolerance(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}
