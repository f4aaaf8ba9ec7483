//! Command driver: argument handling, file IO, error-to-exit-code
//! mapping. Kept separate from `main` so tests can call [`run`] with
//! captured output.
//!
//! Exit codes: 0 success, 1 domain errors (`E_CONTINUITY`, `E_RANGE`,
//! `E_NOT_DIFFERENTIABLE`, `E_UNSUPPORTED`, `E_IO`), 2 syntax errors
//! (`E_PARSE`) and usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;

use cpwp_core::canonical::CanonicalForm;
use cpwp_core::semipoly;
use cpwp_core::{Error, Rat};

use crate::parse::{parse_function, parse_rat, FunctionError};
use crate::print::{format_breakpoint, format_canonical, format_decimal, format_rat, format_semipoly};

#[derive(Parser)]
#[command(
    name = "cpwp",
    about = "Exact arithmetic on continuous piecewise polynomial functions",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a function file and print its canonical form
    Canon { file: PathBuf },
    /// Evaluate a function file at a rational point
    Eval {
        file: PathBuf,
        /// Point to evaluate at, e.g. 5/4 or -3
        #[arg(long, value_parser = rat_arg)]
        at: Rat,
        /// Also print a decimal rendering
        #[arg(long)]
        float: bool,
        /// Significant digits for --float
        #[arg(long, default_value_t = 12)]
        digits: usize,
    },
    /// Print the canonical form of the sum of two function files
    Add { a: PathBuf, b: PathBuf },
    /// Print the canonical form of the product of two function files
    Mul { a: PathBuf, b: PathBuf },
    /// Print the canonical form of OUTER composed with INNER
    Compose { outer: PathBuf, inner: PathBuf },
    /// Print the canonical form of the derivative, if it exists
    Diff { file: PathBuf },
    /// Print the closed form over polynomials and absolute values
    Semipoly { file: PathBuf },
    /// Print a TSV table of exact values over an inclusive grid
    Table {
        file: PathBuf,
        #[command(flatten)]
        grid: Grid,
        /// Emit tab-separated rows (the default and only format)
        #[arg(long)]
        tsv: bool,
    },
    /// Antiderivatives are unsupported; this always fails
    Integrate { file: PathBuf },
}

#[derive(Args)]
struct Grid {
    #[arg(long, value_parser = rat_arg)]
    from: Rat,
    #[arg(long, value_parser = rat_arg)]
    to: Rat,
    #[arg(long, value_parser = rat_arg)]
    step: Rat,
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

struct Failure {
    code: &'static str,
    message: String,
    exit: i32,
}

impl Failure {
    fn new(code: &'static str, exit: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            exit,
            message: message.into(),
        }
    }
}

fn load_function(path: &Path) -> Result<CanonicalForm, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Failure::new("E_IO", 1, format!("cannot read {}: {e}", path.display()))
    })?;
    parse_function(&text).map_err(|e| match e {
        FunctionError::Parse(p) => Failure::new("E_PARSE", 2, p.to_string()),
        FunctionError::RootIndexOutOfRange { .. } => Failure::new("E_RANGE", 1, e.to_string()),
        FunctionError::Domain(Error::Discontinuous { at }) => Failure::new(
            "E_CONTINUITY",
            1,
            format!(
                "pieces do not agree at breakpoint {}",
                format_breakpoint(&at)
            ),
        ),
        FunctionError::Domain(d) => Failure::new("E_RANGE", 1, d.to_string()),
    })
}

fn execute(cmd: Cmd, out: &mut impl Write) -> Result<(), Failure> {
    let emit = |out: &mut dyn Write, s: String| -> Result<(), Failure> {
        writeln!(out, "{s}").map_err(|e| Failure::new("E_IO", 1, e.to_string()))
    };
    match cmd {
        Cmd::Canon { file } => {
            let c = load_function(&file)?;
            emit(out, format_canonical(&c))
        }
        Cmd::Eval {
            file,
            at,
            float,
            digits,
        } => {
            let c = load_function(&file)?;
            let v = semipoly::eval_sign_method(&c, &at);
            emit(out, format_rat(&v))?;
            if float {
                emit(out, format_decimal(&v, digits.max(1)))?;
            }
            Ok(())
        }
        Cmd::Add { a, b } => {
            let (fa, fb) = (load_function(&a)?, load_function(&b)?);
            emit(out, format_canonical(&fa.add(&fb)))
        }
        Cmd::Mul { a, b } => {
            let (fa, fb) = (load_function(&a)?, load_function(&b)?);
            emit(out, format_canonical(&fa.mul(&fb)))
        }
        Cmd::Compose { outer, inner } => {
            let (fo, fi) = (load_function(&outer)?, load_function(&inner)?);
            emit(out, format_canonical(&fo.compose(&fi)))
        }
        Cmd::Diff { file } => {
            let c = load_function(&file)?;
            match c.derivative() {
                Ok(d) => emit(out, format_canonical(&d)),
                Err(Error::NotDifferentiable { at }) => {
                    let spots: Vec<String> = at.iter().map(format_breakpoint).collect();
                    Err(Failure::new(
                        "E_NOT_DIFFERENTIABLE",
                        1,
                        format!("corner at {}", spots.join(", ")),
                    ))
                }
                Err(other) => Err(Failure::new("E_RANGE", 1, other.to_string())),
            }
        }
        Cmd::Semipoly { file } => {
            let c = load_function(&file)?;
            emit(out, format_semipoly(&semipoly::from_canonical(&c)))
        }
        Cmd::Table { file, grid, tsv: _ } => {
            if grid.step <= Rat::zero() {
                return Err(Failure::new("E_RANGE", 1, "step must be positive"));
            }
            if grid.from > grid.to {
                return Err(Failure::new("E_RANGE", 1, "empty grid: from > to"));
            }
            let c = load_function(&file)?;
            let mut x = grid.from.clone();
            while x <= grid.to {
                let v = semipoly::eval_sign_method(&c, &x);
                emit(out, format!("{}\t{}", format_rat(&x), format_rat(&v)))?;
                x += &grid.step;
            }
            Ok(())
        }
        Cmd::Integrate { file } => {
            let _ = load_function(&file)?;
            Err(Failure::new(
                "E_UNSUPPORTED",
                1,
                "antiderivatives of functions with irrational breakpoints need \
                 irrational constant terms, which leave the rational-coefficient \
                 representation; integration is not supported",
            ))
        }
    }
}

/// Run the command line with explicit streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{}: {}", f.code, f.message);
            f.exit
        }
    }
}
