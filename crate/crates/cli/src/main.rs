use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use blossom_cli::format::{self, Format};
use blossom_cli::{exit, CliError, JsonlTrace};
use blossom_core::observe::Quiet;
use blossom_core::{Graph, Observer, SolveOptions, Verdict};
use clap::{Parser, Subcommand};

/// Certifying maximum-cardinality matching for general graphs.
#[derive(Parser)]
#[command(name = "blossom", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a maximum matching with an odd-set cover and self-check it.
    Solve {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
        /// Write the result document here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Stream search events to stderr, one JSON object per line.
        #[arg(long)]
        trace: bool,
        /// Check the search loop invariants at every iteration.
        #[arg(long)]
        check_invariants: bool,
    },
    /// Check a certificate (matching + odd-set cover) against a graph.
    Check {
        graph: PathBuf,
        certificate: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Maximum matching size by exhaustive search (small graphs only).
    Oracle {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: Format,
    },
    /// Print a random G(n, p) graph.
    Gen {
        n: usize,
        p: f64,
        seed: u64,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: Format,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn load_graph(path: &Path, fmt: Format) -> Result<Graph, CliError> {
    format::parse(&read(path)?, fmt).map_err(|e| match e {
        CliError::Parse { line, message } => CliError::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Solve { graph, format, output, trace, check_invariants } => {
            let g = load_graph(&graph, format)?;
            let opts = SolveOptions { check_invariants };
            let stderr = io::stderr();
            let mut tracer = JsonlTrace::new(stderr.lock());
            let obs: &mut dyn Observer = if trace { &mut tracer } else { &mut Quiet };
            let doc = blossom_cli::solve(&g, opts, obs)?;
            write_out(output.as_deref(), &doc.to_json())?;
            if doc.verdict.status == "accept" {
                Ok(exit::OK)
            } else {
                eprintln!("self-check rejected the certificate: {}", doc.verdict.reason.unwrap_or_default());
                Ok(exit::CERTIFICATION)
            }
        }
        Command::Check { graph, certificate, format } => {
            let g = load_graph(&graph, format)?;
            let cert = read(&certificate)?;
            match blossom_cli::check(&g, &cert)? {
                Verdict::Accept => {
                    println!("accept");
                    Ok(exit::OK)
                }
                Verdict::Reject(reason) => {
                    println!("reject: {reason}");
                    Ok(exit::REJECT)
                }
            }
        }
        Command::Oracle { graph, format } => {
            let g = load_graph(&graph, format)?;
            println!("{}", blossom_cli::oracle(&g)?);
            Ok(exit::OK)
        }
        Command::Gen { n, p, seed, format } => {
            let g = blossom_cli::generate(n, p, seed)?;
            write_out(None, &format::emit(&g, format))?;
            Ok(exit::OK)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("blossom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
