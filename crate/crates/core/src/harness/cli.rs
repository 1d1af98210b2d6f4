//! Command line front end.
//!
//! Exit codes: 0 when everything passes, 1 on a FAIL entry or an evaluation
//! error, 2 on usage, parse and ceiling errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::domain::OVERFLOW_SAMPLES;
use crate::error::HarnessError;
use crate::events::{
    annihilating_union, event_difference, event_intersection, Event, RawEventDraft,
};
use crate::harness::document::parse_space;
use crate::harness::enumerate::{check_ceiling, enumerate_events};
use crate::harness::fuzz::{run_fuzz, FuzzConfig};
use crate::measure::ExtendedSpace;
use crate::rational::approximate;
use crate::report::ValidationReport;
use crate::theorems::{run_theorem_checks, run_theorem_suite};
use crate::validate::{validate_axioms, ValidationMode};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "epspace",
    version,
    about = "Finite extended probability spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the axioms against a space file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        /// Pair samples in sampled mode.
        #[arg(long, default_value_t = OVERFLOW_SAMPLES)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate P on an event, normalizing it first.
    Eval {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        event: String,
    },
    /// Run the theorem suite, or selected checks from it.
    Check {
        file: PathBuf,
        /// `all` or a comma-separated list of check ids.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        json: bool,
    },
    /// List every member of F with its value.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Event algebra on two events.
    Calc {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Validate seeded random spaces.
    Fuzz {
        #[arg(long)]
        atoms: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, env = "EPSPACE_SEED", default_value_t = 0)]
        seed: u64,
        /// Only generate powerset algebras.
        #[arg(long)]
        powerset: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Union,
    Intersect,
    Diff,
}

/// Parses `argv` (including the program name) and runs the subcommand.
pub fn run<I, T>(argv: I, stdout: &mut impl Write, stderr: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            return if err.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_PASS
            };
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }

    fn evaluation(message: impl ToString) -> Self {
        Failure {
            code: EXIT_FAIL,
            message: message.to_string(),
        }
    }
}

fn load(path: &Path) -> Result<ExtendedSpace, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_space(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_event(text: &str) -> Result<Event, Failure> {
    text.parse::<Event>().map_err(Failure::usage)
}

fn emit_report(
    out: &mut impl Write,
    report: &ValidationReport,
    json: bool,
) -> Result<i32, Failure> {
    let text = if json {
        report.to_json() + "\n"
    } else {
        report.to_text()
    };
    write_out(out, &text)?;
    Ok(if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    })
}

fn write_out(out: &mut impl Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::evaluation(HarnessError::Io(e)))
}

fn execute(command: Command, out: &mut impl Write) -> Result<i32, Failure> {
    match command {
        Command::Validate {
            file,
            mode,
            trials,
            seed,
            json,
        } => {
            let space = load(&file)?;
            let mode = match mode {
                Mode::Exhaustive => {
                    check_ceiling(&space).map_err(Failure::usage)?;
                    ValidationMode::Exhaustive
                }
                Mode::Sampled => ValidationMode::Sampled { trials, seed },
            };
            emit_report(out, &validate_axioms(&space, mode), json)
        }
        Command::Eval { file, event } => {
            let space = load(&file)?;
            let draft: RawEventDraft = event.parse().map_err(Failure::usage)?;
            let value = space.eval_draft(&draft).map_err(Failure::evaluation)?;
            write_out(
                out,
                &format!("{value} (= {})\n", approximate(value.as_rational())),
            )?;
            Ok(EXIT_PASS)
        }
        Command::Check { file, suite, json } => {
            let space = load(&file)?;
            check_ceiling(&space).map_err(Failure::usage)?;
            let report = if suite.trim() == "all" {
                run_theorem_suite(&space)
            } else {
                let ids: Vec<&str> = suite
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .collect();
                if ids.is_empty() {
                    return Err(Failure::usage("empty --suite list"));
                }
                run_theorem_checks(&space, &ids).map_err(Failure::usage)?
            };
            emit_report(out, &report, json)
        }
        Command::Enumerate { file, limit } => {
            let space = load(&file)?;
            let events = enumerate_events(&space).map_err(Failure::usage)?;
            let mut text = String::new();
            for event in events.iter().take(limit.unwrap_or(usize::MAX)) {
                let value = space.eval_event(event).map_err(Failure::evaluation)?;
                text.push_str(&format!("{} {value}\n", event.braced()));
            }
            write_out(out, &text)?;
            Ok(EXIT_PASS)
        }
        Command::Calc { op, left, right } => {
            let left = parse_event(&left)?;
            let right = parse_event(&right)?;
            let result = match op {
                Op::Union => annihilating_union(&left, &right),
                Op::Intersect => event_intersection(&left, &right),
                Op::Diff => event_difference(&left, &right),
            };
            write_out(out, &format!("{}\n", result.braced()))?;
            Ok(EXIT_PASS)
        }
        Command::Fuzz {
            atoms,
            trials,
            seed,
            powerset,
            json,
        } => {
            let config = FuzzConfig::new(atoms, trials, seed)
                .map_err(Failure::usage)?
                .powerset_only(powerset);
            let results = run_fuzz(&config);
            let failed = results.iter().filter(|t| !t.report.all_passed()).count();
            let text = if json {
                let trials: Vec<_> = results
                    .iter()
                    .map(|t| {
                        serde_json::json!({
                            "trial": t.index,
                            "header": t.header(),
                            "report": t.report,
                        })
                    })
                    .collect();
                serde_json::to_string_pretty(&trials).expect("reports serialize") + "\n"
            } else {
                let mut text = String::new();
                for t in &results {
                    text.push_str(&t.header());
                    text.push('\n');
                    text.push_str(&t.report.to_text());
                }
                text.push_str(&format!(
                    "summary trials={} passed={} failed={}\n",
                    results.len(),
                    results.len() - failed,
                    failed
                ));
                text
            };
            write_out(out, &text)?;
            Ok(if failed == 0 { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("epspace").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn calc_needs_no_file() {
        let (code, out, _) = run_args(&["calc", "--op", "union", "--left", "a,b", "--right", "-a"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{b}\n");
        let (_, out, _) = run_args(&["calc", "--op", "diff", "--left", "a,-b", "--right", "-b"]);
        assert_eq!(out, "{a}\n");
        let (_, out, _) = run_args(&["calc", "--op", "intersect", "--left", "a", "--right", "{}"]);
        assert_eq!(out, "{}\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&[]).0, 2);
        assert_eq!(
            run_args(&["calc", "--op", "xor", "--left", "a", "--right", "b"]).0,
            2
        );
        let (code, _, err) = run_args(&["calc", "--op", "union", "--left", "a,-a", "--right", "b"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error:"));
        assert_eq!(run_args(&["fuzz", "--atoms", "9", "--trials", "1"]).0, 2);
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("validate"));
        assert!(err.is_empty());
    }

    #[test]
    fn fuzz_summary() {
        let (code, out, _) = run_args(&["fuzz", "--atoms", "2", "--trials", "3", "--seed", "4"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# trial 0 atoms=2"));
        assert!(out.ends_with("summary trials=3 passed=3 failed=0\n"));
    }
}
