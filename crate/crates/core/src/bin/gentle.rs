use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gentle::format::{parse_algebra, parse_triangulation, to_dot};
use gentle::fuzz::{self, FuzzConfig};
use gentle::report;
use gentle::{GentleAlgebra, StringModule};

/// Homological computations over gentle algebras.
#[derive(Parser)]
#[command(name = "gentle", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an algebra file and report relation cycles and global dimension.
    Check {
        file: PathBuf,
        /// Print the quiver in DOT format instead of the report.
        #[arg(long)]
        dot: bool,
    },
    /// Dimensions of Ext^i between two string modules.
    Ext {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 12)]
        max: usize,
        /// List middle terms of basis extensions.
        #[arg(long)]
        basis: bool,
    },
    /// Minimal projective resolution of a string module.
    Resolve {
        file: PathBuf,
        #[arg(long)]
        string: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Compare combinatorial Ext dimensions with exact linear algebra.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Run the randomized invariant suite.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        horizon: usize,
    },
    /// Build the gentle algebra of a triangulation.
    Tri {
        file: PathBuf,
        /// Write the algebra file to this path.
        #[arg(long)]
        emit_algebra: Option<PathBuf>,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// Write to stdout, treating a closed pipe as success.
fn emit(x: impl Display) {
    let _ = write!(std::io::stdout().lock(), "{x}");
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<GentleAlgebra, Failure> {
    parse_algebra(&read(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn module(a: &GentleAlgebra, text: &str) -> Result<StringModule, Failure> {
    StringModule::parse(a, text).map_err(|e| Failure(format!("string `{text}`: {e}")))
}

/// Runs a command; `Ok(false)` means it completed but found a mismatch.
fn run(cmd: Command) -> Result<bool, Failure> {
    match cmd {
        Command::Check { file, dot } => {
            let a = load(&file)?;
            if dot {
                emit(to_dot(&a));
            } else {
                emit(report::check_report(&a));
            }
            Ok(true)
        }
        Command::Ext {
            file,
            from,
            to,
            max,
            basis,
        } => {
            let a = load(&file)?;
            let (m, n) = (module(&a, &from)?, module(&a, &to)?);
            emit(report::ext_report(&a, &m, &n, max, basis));
            Ok(true)
        }
        Command::Resolve {
            file,
            string,
            depth,
        } => {
            let a = load(&file)?;
            let m = module(&a, &string)?;
            let depth = depth.unwrap_or_else(|| gentle::homology::default_depth(&a));
            emit(report::resolve_report(&a, &m, depth));
            Ok(true)
        }
        Command::Oracle {
            file,
            from,
            to,
            max,
        } => {
            let a = load(&file)?;
            let (m, n) = (module(&a, &from)?, module(&a, &to)?);
            let (r, pc) = report::oracle_report(&a, &m, &n, max)?;
            emit(&r);
            Ok(pc.agrees())
        }
        Command::Fuzz {
            seed,
            count,
            horizon,
        } => {
            let f = fuzz::run(&FuzzConfig {
                seed,
                count,
                horizon,
            });
            emit(report::fuzz_report(&f));
            Ok(f.passed())
        }
        Command::Tri { file, emit_algebra } => {
            let t = parse_triangulation(&read(&file)?)
                .map_err(|e| Failure(format!("{}: {e}", file.display())))?;
            let a = t.algebra()?;
            emit(report::tri_report(&t, &a));
            if let Some(out) = emit_algebra {
                fs::write(&out, a.to_string())
                    .map_err(|e| Failure(format!("{}: {e}", out.display())))?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
