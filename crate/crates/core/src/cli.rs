//! Command-line surface: `count`, `enumerate`, `map`, `verify`, `springer`.
//!
//! Exit codes: 0 success, 1 data errors (bad input lines, failed
//! properties), 2 usage errors.

use std::io::{self, BufRead, BufWriter, Write};

use clap::{Parser, Subcommand, ValueEnum};

use crate::bijections::{
    fz, fz_inverse, lbp_to_rcalt, lbp_to_snake, phi_inverse, phi_trace, psi, psi_inverse,
    rcalt_to_lbp, snake_to_lbp,
};
use crate::families::{springer_dp, springer_egf, Family, ThreeWIP};
use crate::paths::{LabeledBallotPath, LaguerreHistory};
use crate::perm::{Permutation, SignedPermutation};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DATA: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "springer",
    version,
    about = "Bijections and counts around the Springer numbers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of objects of size n.
    Count {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Oracle)]
        method: Method,
    },
    /// Print every object of size n, one per line, in canonical order.
    Enumerate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Map stdin lines through a bijection.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        #[arg(long)]
        inverse: bool,
        /// Print the intermediate permutations of phi on stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Run every exhaustive property check up to n-max.
    Verify {
        #[arg(long)]
        n_max: usize,
        /// Run only the named property.
        #[arg(long)]
        only: Option<String>,
    },
    /// Print S_0 ..= S_{n-max}.
    Springer {
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumerate,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bijection {
    Phi,
    Psi,
    Fz,
    Bigpsi,
    Snake2lbp,
    Wbar,
}

/// Map one input line. `trace` receives the debug lines for phi.
pub fn map_line(
    bijection: Bijection,
    inverse: bool,
    line: &str,
    trace: Option<&mut dyn FnMut(String)>,
) -> Result<String, String> {
    let e = |err: crate::Error| err.to_string();
    let out = match (bijection, inverse) {
        (Bijection::Phi, false) => {
            let wip: ThreeWIP = line.parse().map_err(e)?;
            let t = phi_trace(&wip).map_err(e)?;
            if let Some(sink) = trace {
                sink(format!("tau = {}", t.tau));
                sink(format!("tau cycles = {}", t.tau.perm.standard_cycle_form()));
                sink(format!("tau~ = {}", t.tau_tilde));
            }
            t.snake.to_string()
        }
        (Bijection::Phi, true) => {
            let s: SignedPermutation = line.parse().map_err(e)?;
            phi_inverse(&s).map_err(e)?.to_string()
        }
        (Bijection::Psi, false) => {
            let s: SignedPermutation = line.parse().map_err(e)?;
            psi(&s).map_err(e)?.to_string()
        }
        (Bijection::Psi, true) => {
            let p: Permutation = line.parse().map_err(e)?;
            psi_inverse(&p).map_err(e)?.to_string()
        }
        (Bijection::Fz, false) => {
            let p: Permutation = line.parse().map_err(e)?;
            fz(&p).to_string()
        }
        (Bijection::Fz, true) => {
            let h: LaguerreHistory = line.parse().map_err(e)?;
            fz_inverse(&h).map_err(e)?.to_string()
        }
        (Bijection::Bigpsi, false) => {
            let p: Permutation = line.parse().map_err(e)?;
            rcalt_to_lbp(&p).map_err(e)?.to_string()
        }
        (Bijection::Bigpsi, true) => {
            let l: LabeledBallotPath = line.parse().map_err(e)?;
            lbp_to_rcalt(&l).map_err(e)?.to_string()
        }
        (Bijection::Snake2lbp, false) => {
            let s: SignedPermutation = line.parse().map_err(e)?;
            snake_to_lbp(&s).map_err(e)?.to_string()
        }
        (Bijection::Snake2lbp, true) => {
            let l: LabeledBallotPath = line.parse().map_err(e)?;
            lbp_to_snake(&l).map_err(e)?.to_string()
        }
        (Bijection::Wbar, _) => {
            let l: LabeledBallotPath = line.parse().map_err(e)?;
            l.wbar().to_string()
        }
    };
    Ok(out)
}

fn write_result(r: io::Result<()>) -> i32 {
    match r {
        Ok(()) => EXIT_OK,
        Err(err) if err.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(err) => {
            eprintln!("io error: {err}");
            EXIT_DATA
        }
    }
}

fn run_map(bijection: Bijection, inverse: bool, trace: bool) -> i32 {
    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut failed = false;
    let result = (|| -> io::Result<()> {
        for (idx, line) in stdin.lock().lines().enumerate() {
            let line = line?;
            let mut sink = |msg: String| eprintln!("trace {}: {msg}", idx + 1);
            let tracer: Option<&mut dyn FnMut(String)> = if trace { Some(&mut sink) } else { None };
            match map_line(bijection, inverse, &line, tracer) {
                Ok(mapped) => writeln!(out, "{mapped}")?,
                Err(reason) => {
                    failed = true;
                    eprintln!("ERROR {}: {reason}", idx + 1);
                }
            }
        }
        out.flush()
    })();
    match write_result(result) {
        EXIT_OK if failed => EXIT_DATA,
        code => code,
    }
}

fn run_enumerate(family: Family, n: usize) -> i32 {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = (|| -> io::Result<()> {
        for line in family.enumerate_lines(n) {
            writeln!(out, "{line}")?;
        }
        out.flush()
    })();
    write_result(result)
}

fn run_springer(n_max: usize) -> i32 {
    let table = springer_egf(n_max);
    if n_max <= 12 && springer_dp(n_max).values != table.values {
        eprintln!("EGF and DP disagree");
        return EXIT_DATA;
    }
    let mut text = String::new();
    for v in &table.values {
        text.push_str(&v.to_string());
        text.push('\n');
    }
    write_result(io::stdout().lock().write_all(text.as_bytes()))
}

fn run_verify(n_max: usize, only: Option<String>) -> i32 {
    let report = match only {
        Some(name) => match verify::find(&name) {
            Some(p) => verify::Report {
                rows: vec![verify::run_property(&p, n_max)],
            },
            None => {
                eprintln!("unknown property {name:?}");
                return EXIT_USAGE;
            }
        },
        None => verify::run_all(n_max),
    };
    println!("{report}");
    if report.all_passed() {
        EXIT_OK
    } else {
        EXIT_DATA
    }
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Count { family, n, method } => {
            let count = match method {
                Method::Enumerate => family.count_enumerated(n).to_string(),
                Method::Oracle => family.count_oracle(n).to_string(),
            };
            println!("{count}");
            EXIT_OK
        }
        Command::Enumerate { family, n } => run_enumerate(family, n),
        Command::Map {
            bijection,
            inverse,
            trace,
        } => {
            if trace && bijection != Bijection::Phi {
                eprintln!("--trace is only available for --bijection phi");
                return EXIT_USAGE;
            }
            run_map(bijection, inverse, trace)
        }
        Command::Verify { n_max, only } => run_verify(n_max, only),
        Command::Springer { n_max } => run_springer(n_max),
    }
}

pub fn main() -> i32 {
    run(Cli::parse())
}
