//! Command-line front-end: argument parsing, config files and the
//! subcommands. [`run`] returns the process exit code and never panics on
//! malformed input.

mod commands;
mod config;
mod grid;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use grid::parse_grid;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Exit code for a failed assertion or audit.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for usage, input and I/O errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "faber", version, about = "Faber-polynomial coefficient calculus and bound checks")]
#[command(args_override_self = true)]
pub struct Cli {
    /// JSON object of flags; flags given on the command line take precedence
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Truncation order N
    #[arg(long, global = true)]
    pub order: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the main output to this file instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// K_n^p, the z^n coefficient of (f(z)/z)^p
    Kp {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        p: i64,
    },
    /// Partition polynomial D_n^m with a1 = 1
    Bell {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
    },
    /// Compositional inverse of a series
    Invert(InvertArgs),
    /// Coefficients F_1 .. F_{N-1} of the class operator
    Operator {
        #[command(flatten)]
        params: ParamArgs,
        /// Only F_{n-1} and the leading coefficient of a_n
        #[arg(long)]
        n: Option<usize>,
    },
    /// Coefficient bounds over a parameter grid
    Bounds(BoundsArgs),
    /// Symbolic audit of the reference displays
    Audit {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Seeded falsification run
    Sample(SampleArgs),
}

/// Class parameters. Each accepts a rational (`3/2`, `0.25`, `2`) or, where
/// a grid is allowed, `start:stop:step`.
#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
}

#[derive(Debug, Args)]
pub struct InvertArgs {
    /// Series JSON file (`-` for stdin): symbolic `{"order", "coeffs": [poly...]}`
    /// or numeric `{"coeffs": [1, a2, ...]}` with entries `x` or `[re, im]`
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Invert the generic series z + a2 z^2 + ... + aN z^N
    #[arg(long)]
    pub generic: bool,
    /// Numeric coefficients a2,a3,... as a comma-separated list
    #[arg(long, allow_hyphen_values = true, value_name = "LIST")]
    pub coeffs: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    An,
    A2,
    A3,
    Fekete,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "a2")]
    pub target: TargetArg,
    /// Coefficient index for `--target an`
    #[arg(long)]
    pub n: Option<usize>,
    /// Allow `--target an` with n = 2 or 3
    #[arg(long)]
    pub unchecked: bool,
    /// Specialize each grid point to a named subclass
    #[arg(long, value_name = "NAME")]
    pub class: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    /// |a_n| with vanishing lower coefficients
    #[value(name = "1")]
    One,
    /// |a2|, |a3| and the Fekete-type functional
    #[value(name = "2")]
    Two,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, value_enum, default_value = "2")]
    pub theorem: TheoremArg,
    /// Coefficient index for `--theorem 1`
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    /// Inject the extremal constructions instead of random data
    #[arg(long)]
    pub boundary: bool,
    /// Exit with code 1 if any violation is found
    #[arg(long)]
    pub assert: bool,
    /// Spread trials over worker threads; output is identical to a serial run
    #[arg(long)]
    pub parallel: bool,
}

/// Runs the CLI on `args` (program name first), writing to `stdout` and
/// `stderr`, and returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match config::expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            return EXIT_USAGE;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match commands::dispatch(&cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            EXIT_USAGE
        }
    }
}

/// [`run_with`] on the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
