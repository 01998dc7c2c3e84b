//! Command-line front end.
//!
//! Exit codes: 0 when the command succeeds or the checked property holds, 1
//! when the property fails (a witness is printed), 2 for usage, parse and
//! parameter errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::construct::construct;
use crate::cover::{build_covering, exact_cover_size, SearchOutcome};
use crate::cubes::{blocks_to_mols, extract_cubes, lift_cubes, mols_to_blocks};
use crate::format::{parse_blocks, parse_cubes, write_blocks, write_cubes};
use crate::params::{pow, IndexSet};
use crate::verify::{
    is_covering, is_decomposition, is_mutually_invertible, latin_violation,
    orthogonality_violation, VerifyReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kdecomp",
    version,
    about = "Decompositions of complete multipartite graphs into cliques"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Shape {
    /// Number of colour classes
    #[arg(long)]
    k: usize,
    /// Symbols per colour class
    #[arg(long)]
    n: usize,
    /// Strength (clique size that must be covered)
    #[arg(long = "l")]
    ell: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an exact decomposition and write it as a block file
    Construct {
        #[command(flatten)]
        shape: Shape,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a block file for exactness or covering
    Verify {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Exact)]
        mode: Mode,
    },
    /// Check or convert Latin cube systems
    #[command(group(ArgGroup::new("op").required(true).args(["check", "extract", "lift", "mols2blocks", "blocks2mols"])))]
    Cubes {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Property of a cube file to check
        #[arg(long, value_enum)]
        check: Option<Check>,
        /// Read cubes off a block file at these comma-separated colours
        #[arg(long, value_delimiter = ',')]
        extract: Option<Vec<usize>>,
        /// Cube file to block file
        #[arg(long)]
        lift: bool,
        /// Square file to block file, requiring mutually orthogonal squares
        #[arg(long)]
        mols2blocks: bool,
        /// Block file of a 2-decomposition to its squares
        #[arg(long)]
        blocks2mols: bool,
    },
    /// Build a covering, fusing symbols when no exact construction applies
    Cover {
        #[command(flatten)]
        shape: Shape,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive search for the minimum covering size (tiny instances)
    Minsearch {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Cover,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Check {
    Latin,
    Orthogonal,
    Invertible,
}

type CmdResult = Result<i32, String>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_ERROR;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Construct { shape, output } => {
            let family = construct(shape.k, shape.n, shape.ell).map_err(|e| e.to_string())?;
            emit(output.as_deref(), &write_blocks(&family), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { input, mode } => {
            let family =
                parse_blocks(&read(&input)?).map_err(|e| format!("{}: {e}", input.display()))?;
            let report = match mode {
                Mode::Exact => is_decomposition(&family),
                Mode::Cover => is_covering(&family),
            };
            let holds = match mode {
                Mode::Exact => report.is_exact(),
                Mode::Cover => report.is_covering(),
            };
            if holds {
                say(
                    out,
                    &format!("{:?} blocks={}", report.verdict, family.len()).to_uppercase(),
                )?;
                Ok(EXIT_OK)
            } else {
                print_witness(out, &report)
            }
        }
        Command::Cubes {
            input,
            output,
            check,
            extract,
            lift,
            mols2blocks,
            blocks2mols,
        } => {
            let text = read(&input)?;
            let parse_err = |e: crate::format::ParseError| format!("{}: {e}", input.display());
            if let Some(check) = check {
                let set = parse_cubes(&text).map_err(parse_err)?;
                return cube_check(check, &set, out);
            }
            let written = if let Some(positions) = extract {
                let family = parse_blocks(&text).map_err(parse_err)?;
                let positions =
                    IndexSet::new(positions, family.params()).map_err(|e| e.to_string())?;
                write_cubes(&extract_cubes(&family, &positions).map_err(|e| e.to_string())?)
            } else if blocks2mols {
                let family = parse_blocks(&text).map_err(parse_err)?;
                write_cubes(&blocks_to_mols(&family).map_err(|e| e.to_string())?)
            } else if lift {
                write_blocks(&lift_cubes(&parse_cubes(&text).map_err(parse_err)?))
            } else {
                debug_assert!(mols2blocks);
                let set = parse_cubes(&text).map_err(parse_err)?;
                write_blocks(&mols_to_blocks(&set).map_err(|e| e.to_string())?)
            };
            emit(output.as_deref(), &written, out)?;
            Ok(EXIT_OK)
        }
        Command::Cover { shape, output } => {
            let covering =
                build_covering(shape.k, shape.n, shape.ell).map_err(|e| e.to_string())?;
            if let Some(path) = output.as_deref() {
                emit(Some(path), &write_blocks(&covering.family), out)?;
            }
            say(
                out,
                &format!(
                    "size={} lower={} lifted_order={}",
                    covering.size(),
                    pow(shape.n, shape.ell),
                    covering.lifted_order
                ),
            )?;
            Ok(EXIT_OK)
        }
        Command::Minsearch { shape, budget } => {
            match exact_cover_size(shape.k, shape.n, shape.ell, budget)
                .map_err(|e| e.to_string())?
            {
                SearchOutcome::Minimum(size) => say(out, &size.to_string())?,
                SearchOutcome::Unknown => say(out, "unknown (budget)")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn cube_check(check: Check, set: &crate::latin::CubeSet, out: &mut dyn Write) -> CmdResult {
    match check {
        Check::Latin => {
            for (i, cube) in set.cubes().iter().enumerate() {
                if let Some(v) = latin_violation(cube) {
                    say(out, &format!("NONLATIN cube {}: {v}", i + 1))?;
                    return Ok(EXIT_FAIL);
                }
            }
            say(out, "LATIN")?;
            Ok(EXIT_OK)
        }
        Check::Orthogonal => match orthogonality_violation(set).map_err(|e| e.to_string())? {
            None => {
                say(out, "ORTHOGONAL")?;
                Ok(EXIT_OK)
            }
            Some(v) => {
                say(out, &format!("NONORTHOGONAL {v}"))?;
                Ok(EXIT_FAIL)
            }
        },
        Check::Invertible => {
            let report = is_mutually_invertible(set);
            if report.is_exact() {
                say(out, "INVERTIBLE")?;
                Ok(EXIT_OK)
            } else {
                print_witness(out, &report)
            }
        }
    }
}

fn print_witness(out: &mut dyn Write, report: &VerifyReport) -> CmdResult {
    let witness = report
        .witness
        .as_ref()
        .expect("failing reports carry a witness");
    say(out, &witness.to_string())?;
    Ok(EXIT_FAIL)
}

fn say(out: &mut dyn Write, line: &str) -> Result<(), String> {
    writeln!(out, "{line}").map_err(|e| e.to_string())
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), String> {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("kdecomp").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn construct_to_stdout() {
        let (code, out, _) = run_capture(&["construct", "--k", "2", "--n", "3", "--l", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("blocks 2 3 2 9\n"));
        assert_eq!(out.lines().count(), 10);
    }

    #[test]
    fn construct_blocking_prime() {
        let (code, _, err) = run_capture(&["construct", "--k", "6", "--n", "10", "--l", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("prime 2"), "{err}");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(
            run_capture(&["construct", "--k", "x", "--n", "3", "--l", "2"]).0,
            2
        );
        assert_eq!(run_capture(&["bogus"]).0, 2);
        assert_eq!(
            run_capture(&["construct", "--k", "2", "--n", "3", "--l", "3"]).0,
            2
        );
        assert_eq!(run_capture(&["verify", "-i", "/nonexistent/file"]).0, 2);
        assert_eq!(run_capture(&["--help"]).0, 0);
    }

    #[test]
    fn cover_and_minsearch_report() {
        let (code, out, _) = run_capture(&["cover", "--k", "4", "--n", "2", "--l", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("lower=4 lifted_order=5"), "{out}");
        let (_, out, _) = run_capture(&["minsearch", "--k", "4", "--n", "2", "--l", "2"]);
        assert_eq!(out.trim(), "5");
        let (_, out, _) = run_capture(&[
            "minsearch",
            "--k",
            "4",
            "--n",
            "2",
            "--l",
            "2",
            "--budget",
            "2",
        ]);
        assert_eq!(out.trim(), "unknown (budget)");
        let (code, _, _) = run_capture(&["minsearch", "--k", "8", "--n", "3", "--l", "2"]);
        assert_eq!(code, 2);
    }
}
