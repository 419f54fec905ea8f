//! Command-line front end for `naples-core`.
//!
//! Exit codes: 0 on success, 1 when a verification report is not ok (the
//! report is still printed), 2 for invalid arguments or inputs.

pub mod args;
pub mod output;
pub mod parallel;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;
use naples_core::bijection::{k_decompose, xi, xi_bar, xi_inverse};
use naples_core::census::{
    count_classical, count_contained, count_lpf, naples_count_recursive_with, verify_with, Claim,
    Family, FamilySpec, Guardrail,
};
use naples_core::reflections::{iota, phi, phi_bar};
use naples_core::rules::{park_classical, park_naples, park_obstructed};
use naples_core::ties::{psi_big, psi_small, stats};
use naples_core::{Lot, PrefSeq};

use args::{ClaimArg, Cli, Command, FamilyArg, Formula, MapOp, ParkRule};
use parallel::Threaded;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug)]
enum Failure {
    Core(naples_core::Error),
    Io(std::io::Error),
}

impl From<naples_core::Error> for Failure {
    fn from(e: naples_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the
/// exit code. Results go to `out`; diagnostics go to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            return EXIT_INVALID;
        }
        Err(e) => {
            // --help and --version
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
    };
    let code = match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    };
    match out.flush() {
        Ok(()) => code,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_INVALID
        }
    }
}

fn family(arg: FamilyArg) -> Family {
    match arg {
        FamilyArg::Pf => Family::Pf,
        FamilyArg::Naples => Family::Naples,
        FamilyArg::Contained => Family::Contained,
        FamilyArg::Opf => Family::Opf,
        FamilyArg::Lpf => Family::Lpf,
    }
}

fn claim(arg: ClaimArg, m: usize, n: usize, k: usize) -> Claim {
    match arg {
        ClaimArg::Bijection => Claim::Bijection { m, n, k },
        ClaimArg::Ties => Claim::Ties { m, n, k },
        ClaimArg::Injection => Claim::Injection { m, n, k },
        ClaimArg::Recursion => Claim::Recursion { n, k },
        ClaimArg::LpfCount => Claim::LpfCount { n, k },
        ClaimArg::Bound => Claim::Bound { n, k },
    }
}

/// Lot of `n` free vertices plus a block of `k` starting at `start` (1 when
/// unset); no block when `k = 0`.
fn obstructed_lot(n: usize, k: usize, start: Option<usize>) -> Result<Lot, Failure> {
    Ok(Lot::with_block(n, k, start.unwrap_or(1))?)
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let format = cli.format;
    let threaded = Threaded {
        threads: usize::from(cli.threads),
    };
    match &cli.command {
        Command::Park {
            family,
            n,
            k,
            obstruction_start,
            prefs,
        } => {
            let f = PrefSeq::new(prefs.0.clone())?;
            let outcome = match family {
                ParkRule::Classical => park_classical(&f, *n)?,
                ParkRule::Naples => park_naples(&f, *n, *k)?,
                ParkRule::Obstructed => {
                    park_obstructed(&f, &obstructed_lot(*n, *k, *obstruction_start)?)?
                }
            };
            output::outcome(out, format, &f, &outcome)?;
        }
        Command::Map {
            op,
            n,
            k,
            obstruction_start,
            prefs,
        } => {
            let f = PrefSeq::new(prefs.0.clone())?;
            let (n, k) = (*n, *k);
            match op {
                MapOp::Phi => output::sequence(out, format, &phi(&f, n)?)?,
                MapOp::Xi => output::sequence(out, format, &xi(&f, n, k)?)?,
                MapOp::XiInv => output::sequence(out, format, &xi_inverse(&f, n, k)?)?,
                MapOp::PsiSmall => output::sequence(out, format, &psi_small(&f, n, k)?)?,
                MapOp::PsiBig => output::sequence(out, format, &psi_big(&f, n, k)?)?,
                MapOp::PhiBar => {
                    let lot = obstructed_lot(n, k, *obstruction_start)?;
                    let (g, moved) = phi_bar(&f, &lot)?;
                    output::placed_sequence(out, format, &g, &moved)?;
                }
                MapOp::Iota => {
                    let (g, lot) = iota(&f, n, k)?;
                    output::placed_sequence(out, format, &g, &lot)?;
                }
                MapOp::XiBar => {
                    let (g, lot) = xi_bar(&f, n, k)?;
                    output::placed_sequence(out, format, &g, &lot)?;
                }
            }
        }
        Command::Decompose { n, k, prefs } => {
            let f = PrefSeq::new(prefs.0.clone())?;
            let d = k_decompose(&f, *n, *k)?;
            output::decomposition(out, format, &f, &d)?;
        }
        Command::Stats { prefs } => {
            output::stats(out, format, &stats(&prefs.0))?;
        }
        Command::Enumerate {
            family: fam,
            m,
            n,
            k,
            obstruction_start,
            limit,
            max_candidates,
        } => {
            let spec = FamilySpec::new(family(*fam), m.unwrap_or(*n), *n, *k, *obstruction_start)?;
            Guardrail {
                cap: *max_candidates,
            }
            .check(&spec)?;
            let limit = limit.unwrap_or(usize::MAX);
            if threaded.threads > 1 {
                use naples_core::census::Enumerator;
                let all = threaded.members(&spec);
                output::members(out, format, all.into_iter().take(limit))?;
            } else {
                output::members(out, format, spec.members().take(limit))?;
            }
        }
        Command::Count {
            formula,
            m,
            n,
            k,
            max_candidates,
        } => {
            let value = match formula {
                Formula::Classical => count_classical(m.unwrap_or(*n), *n)?,
                Formula::Contained => count_contained(*n),
                Formula::Lpf => count_lpf(*n, *k),
                Formula::NaplesRecursive => {
                    if *n >= 1 {
                        let largest = FamilySpec::new(Family::Contained, n - 1, n - 1, *k, None)?;
                        Guardrail {
                            cap: *max_candidates,
                        }
                        .check(&largest)?;
                    }
                    naples_count_recursive_with(*n, *k, &threaded)?
                }
            };
            output::integer(out, &value)?;
        }
        Command::Verify {
            claim: which,
            m,
            n,
            k,
            max_candidates,
        } => {
            let guard = Guardrail {
                cap: *max_candidates,
            };
            let report = verify_with(claim(*which, m.unwrap_or(*n), *n, *k), &guard, &threaded)?;
            output::report(out, format, &report)?;
            if !report.ok {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Convenience for callers that only need the rendered text.
pub fn run_to_string<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
