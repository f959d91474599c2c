//! The `flagsig` command line: argument and problem-file parsing, dispatch
//! to the library, and JSON or text reports.
//!
//! Exit codes: 0 success, 1 a self-test or check failed, 2 malformed input,
//! 3 a mathematical precondition failed (infinite codimension, degenerate
//! forms, a field that is not tangent, ...).

mod problem;
mod report;
mod selftest;
mod tasks;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::flags::DEFAULT_CHECK_SEED;

pub use problem::ProblemFile;
pub use report::{rat_str, Provenance, Report, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

/// Default number of extra random functionals a result is checked against.
pub const DEFAULT_CLI_TRIALS: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "flagsig",
    version,
    about = "Signatures of flag forms, Jantzen filtrations and GSV indices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for the random functionals used in cross-checks.
    #[arg(long, global = true, value_name = "U64")]
    pub seed: Option<u64>,

    /// Number of random functionals to cross-check against [default: 5].
    #[arg(long, global = true, value_name = "N")]
    pub trials: Option<usize>,

    /// Run the task described by a JSON problem file instead of a subcommand.
    #[arg(long, global = true, value_name = "FILE")]
    pub problem: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// EL signature (local degree) of a map germ.
    El(ElArgs),
    /// Flag of an element and the signatures of its order-m forms.
    Flag(FlagArgs),
    /// Jantzen filtration of a symmetric matrix family.
    Jantzen(JantzenArgs),
    /// GSV index on a hypersurface, with the constants K+ and K-.
    Gsv(GsvArgs),
    /// Index of a vector field: Poincaré–Hopf, or GSV when --f is given.
    Index(IndexArgs),
    /// Run the built-in invariant suites.
    Selftest,
}

#[derive(Args, Debug)]
pub struct ElArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    pub vars: String,
    /// Comma-separated map components.
    #[arg(
        long,
        conflicts_with = "f",
        required_unless_present = "f",
        allow_hyphen_values = true
    )]
    pub map: Option<String>,
    /// Use the gradient of this function as the map.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
}

#[derive(Args, Debug)]
pub struct FlagArgs {
    #[arg(long)]
    pub vars: String,
    /// The element whose flag is computed.
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Generators of the algebra [default: the gradient of f].
    #[arg(long, allow_hyphen_values = true)]
    pub map: Option<String>,
}

#[derive(Args, Debug)]
pub struct JantzenArgs {
    /// MatrixFamily JSON file.
    #[arg(long, conflicts_with_all = ["f", "f1"], required_unless_present = "f")]
    pub family: Option<PathBuf>,
    /// Variable of the univariate relative family.
    #[arg(long, default_value = "x")]
    pub vars: String,
    /// Monomial `c*x^nu` defining the family `f = t`.
    #[arg(long, requires = "f1", allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Weight of the relative form.
    #[arg(long, allow_hyphen_values = true)]
    pub f1: Option<String>,
    /// Comma-separated nonzero rationals at which to evaluate the signature
    /// [default: 1/16,-1/16].
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
}

#[derive(Args, Debug)]
pub struct GsvArgs {
    #[arg(long)]
    pub vars: String,
    /// Function defining the hypersurface.
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Tangent vector field [default: the contact field, odd dimension only].
    #[arg(long, allow_hyphen_values = true)]
    pub field: Option<String>,
}

#[derive(Args, Debug)]
pub struct IndexArgs {
    #[arg(long)]
    pub vars: String,
    /// Vector field components.
    #[arg(long, allow_hyphen_values = true)]
    pub field: String,
    /// Hypersurface the field is tangent to.
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
}

/// Seed and trial count shared by every task.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub seed: u64,
    pub trials: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: DEFAULT_CHECK_SEED,
            trials: DEFAULT_CLI_TRIALS,
        }
    }
}

/// A parsed request, from either the command line or a problem file.
#[derive(Clone, Debug)]
pub enum Request {
    El {
        vars: String,
        map: Option<String>,
        f: Option<String>,
    },
    Flag {
        vars: String,
        f: String,
        map: Option<String>,
    },
    Jantzen {
        family: Option<String>,
        vars: String,
        f: Option<String>,
        f1: Option<String>,
        t: Option<String>,
    },
    Gsv {
        vars: String,
        f: String,
        field: Option<String>,
    },
    Index {
        vars: String,
        field: String,
        f: Option<String>,
    },
    Check {
        vars: String,
        f: String,
    },
    Selftest,
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    /// Wraps an engine error, naming where it came from.
    pub fn from_error(e: Error, origin: &str) -> Self {
        let code = if e.is_input_error() {
            EXIT_INPUT
        } else {
            EXIT_PRECONDITION
        };
        Failure {
            code,
            message: format!("{origin}: {e}"),
        }
    }
}

/// What a successful run produced.
pub struct Outcome {
    pub report: Report,
    /// False when a check or self-test failed.
    pub passed: bool,
}

/// Runs one task and returns its outcome.
pub fn execute(req: &Request, opts: CheckOptions) -> Result<Outcome, Failure> {
    match req {
        Request::El { vars, map, f } => tasks::el(vars, map.as_deref(), f.as_deref(), opts),
        Request::Flag { vars, f, map } => tasks::flag(vars, f, map.as_deref(), opts),
        Request::Jantzen {
            family,
            vars,
            f,
            f1,
            t,
        } => tasks::jantzen(
            family.as_deref(),
            vars,
            f.as_deref(),
            f1.as_deref(),
            t.as_deref(),
        ),
        Request::Gsv { vars, f, field } => tasks::gsv(vars, f, field.as_deref(), opts),
        Request::Index { vars, field, f } => tasks::index(vars, field, f.as_deref(), opts),
        Request::Check { vars, f } => tasks::check(vars, f, opts),
        Request::Selftest => Ok(selftest::run(opts)),
    }
}

fn request_from(cmd: Command) -> Result<Request, Failure> {
    Ok(match cmd {
        Command::El(a) => Request::El {
            vars: a.vars,
            map: a.map,
            f: a.f,
        },
        Command::Flag(a) => Request::Flag {
            vars: a.vars,
            f: a.f,
            map: a.map,
        },
        Command::Jantzen(a) => {
            let family = match a.family {
                Some(path) => Some(
                    std::fs::read_to_string(&path)
                        .map_err(|e| Failure::input(format!("--family {}: {e}", path.display())))?,
                ),
                None => None,
            };
            Request::Jantzen {
                family,
                vars: a.vars,
                f: a.f,
                f1: a.f1,
                t: a.t,
            }
        }
        Command::Gsv(a) => Request::Gsv {
            vars: a.vars,
            f: a.f,
            field: a.field,
        },
        Command::Index(a) => Request::Index {
            vars: a.vars,
            field: a.field,
            f: a.f,
        },
        Command::Selftest => Request::Selftest,
    })
}

/// Parses `argv`, runs the task and returns the exit code together with the
/// text for stdout and stderr.
pub fn run_to_strings<I, T>(argv: I) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                (code, text, String::new())
            } else {
                (code, String::new(), text)
            };
        }
    };
    match run_cli(cli) {
        Ok((out, passed)) => (
            if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
            out,
            String::new(),
        ),
        Err(f) => (f.code, String::new(), format!("error: {}\n", f.message)),
    }
}

fn run_cli(cli: Cli) -> Result<(String, bool), Failure> {
    let (req, mut opts) = match (cli.problem, cli.command) {
        (Some(_), Some(_)) => {
            return Err(Failure::input(
                "--problem cannot be combined with a subcommand",
            ))
        }
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::input(format!("--problem {}: {e}", path.display())))?;
            let pf = ProblemFile::from_json(&text)
                .map_err(|e| Failure::from_error(e, &path.display().to_string()))?;
            pf.into_request()
        }
        (None, Some(cmd)) => (request_from(cmd)?, CheckOptions::default()),
        (None, None) => return Err(Failure::input("no subcommand given; try --help")),
    };
    if let Some(s) = cli.seed {
        opts.seed = s;
    }
    if let Some(t) = cli.trials {
        opts.trials = t;
    }
    let outcome = execute(&req, opts)?;
    let text = if cli.json {
        outcome.report.render_json() + "\n"
    } else {
        outcome.report.render_text()
    };
    Ok((text, outcome.passed))
}

/// Entry point of the binary; returns the process exit code.
pub fn main() -> i32 {
    let (code, out, err) = run_to_strings(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    code
}
