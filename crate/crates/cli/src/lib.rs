//! Surface files, text reports, SVG diagrams and the `fenchel` command line.

pub mod format;
pub mod oracle;
pub mod report;
pub mod svg;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use fenchel_core::{FnSurface, PantsGraph, Rational};

pub use format::{emit_surface, parse_surface, ParseError};

/// Exit status for a real surface or a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit status when the surface is not real, or a check fails.
pub const EXIT_NOT_REAL: i32 = 1;
/// Exit status for usage, parse and I/O errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fenchel", version, about = "Real structures on hyperbolic surfaces in Fenchel–Nielsen coordinates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether every twist is 0 or 1/2 (exit 0 if real, 1 if not).
    Check { file: Option<PathBuf> },
    /// List the fixed curves of the real structure.
    Trace { file: Option<PathBuf> },
    /// Topological type of the real structure.
    Classify { file: Option<PathBuf> },
    /// Certified lower bounds on the distance from the fixed set.
    Bounds { file: Option<PathBuf> },
    /// Emit the chain-of-handles surface of a given genus.
    GenChain {
        #[arg(long)]
        genus: usize,
        /// One twist for every edge, or a single twist for all of them.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        twists: Vec<String>,
        /// One length for every edge, or a single length for all of them.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        lengths: Vec<String>,
    },
    /// Emit a real surface whose certified distance bound exceeds C.
    GenUnbounded {
        #[arg(short = 'C', long = "C")]
        c: f64,
        #[arg(long, default_value_t = 2)]
        genus: usize,
    },
    /// Draw the pants graph and fixed curves as SVG.
    Render {
        file: Option<PathBuf>,
        /// Output path, `-` for standard output.
        #[arg(long)]
        out: PathBuf,
    },
    /// Cross-check the closed-form trigonometry against the half-plane model.
    OracleVerify,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn not_real(message: impl Into<String>) -> Self {
        Self { code: EXIT_NOT_REAL, message: message.into() }
    }
}

fn read_input(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<(String, String), Failure> {
    match file {
        Some(path) if path.as_os_str() != "-" => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
            Ok((text, path.display().to_string()))
        }
        _ => {
            let mut text = String::new();
            stdin.read_to_string(&mut text).map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
            Ok((text, "<stdin>".into()))
        }
    }
}

fn load(file: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<FnSurface, Failure> {
    let (text, name) = read_input(file, stdin)?;
    parse_surface(&text).map_err(|e| Failure::usage(format!("{name}: {e}")))
}

fn parse_twist(text: &str) -> Result<Rational, String> {
    if text.contains('/') {
        format::parse_rational(text)
    } else {
        text.parse::<i64>().map(Rational::from_integer).map_err(|_| format!("`{text}` is not a twist p/q"))
    }
}

/// Expands a list of one value or `count` values.
fn per_edge<T: Clone>(values: Vec<T>, count: usize, what: &str) -> Result<Vec<T>, Failure> {
    match values.len() {
        1 => Ok(vec![values[0].clone(); count]),
        n if n == count => Ok(values),
        n => Err(Failure::usage(format!("expected 1 or {count} {what}, found {n}"))),
    }
}

fn write_out(stdout: &mut dyn Write, text: &str) -> Result<(), Failure> {
    stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("cannot write output: {e}")))
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Check { file } => {
            let s = load(&file, stdin)?;
            write_out(stdout, &report::check(&s))?;
            Ok(if s.is_real() { EXIT_OK } else { EXIT_NOT_REAL })
        }
        Command::Trace { file } => {
            let s = load(&file, stdin)?;
            let text = report::trace(&s).map_err(|e| Failure::not_real(e.to_string()))?;
            write_out(stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let s = load(&file, stdin)?;
            let text = report::classify(&s).map_err(|e| Failure::not_real(e.to_string()))?;
            write_out(stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::Bounds { file } => {
            let s = load(&file, stdin)?;
            let text = report::bounds(&s).map_err(|e| Failure::not_real(e.to_string()))?;
            write_out(stdout, &text)?;
            Ok(EXIT_OK)
        }
        Command::GenChain { genus, twists, lengths } => {
            let graph = PantsGraph::chain(genus).map_err(|e| Failure::usage(e.to_string()))?;
            let edges = graph.edge_count();
            if twists.is_empty() {
                return Err(Failure::usage("--twists needs at least one value"));
            }
            let twists = twists.iter().map(|t| parse_twist(t)).collect::<Result<Vec<_>, _>>().map_err(Failure::usage)?;
            let lengths =
                lengths.iter().map(|l| format::parse_decimal(l)).collect::<Result<Vec<_>, _>>().map_err(Failure::usage)?;
            let twists = per_edge(twists, edges, "twists")?;
            let lengths = per_edge(lengths, edges, "lengths")?;
            let s = FnSurface::new(graph, lengths, twists).map_err(|e| Failure::usage(e.to_string()))?;
            write_out(stdout, &emit_surface(&s))?;
            Ok(EXIT_OK)
        }
        Command::GenUnbounded { c, genus } => {
            let s = fenchel_core::unbounded_example(c, genus).map_err(|e| Failure::usage(e.to_string()))?;
            write_out(stdout, &format!("# certified distance bound above {c}\n{}", emit_surface(&s)))?;
            Ok(EXIT_OK)
        }
        Command::Render { file, out } => {
            let s = load(&file, stdin)?;
            let svg = svg::render(&s);
            if out.as_os_str() == "-" {
                write_out(stdout, &svg)?;
            } else {
                std::fs::write(&out, svg).map_err(|e| Failure::usage(format!("cannot write {}: {e}", out.display())))?;
            }
            Ok(EXIT_OK)
        }
        Command::OracleVerify => {
            let checks = oracle::run_checks();
            write_out(stdout, &oracle::report(&checks))?;
            Ok(if checks.iter().all(oracle::Check::passed) { EXIT_OK } else { EXIT_NOT_REAL })
        }
    }
}

/// Runs one command line and returns the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
