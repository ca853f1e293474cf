use std::fs;
use std::io::{self, Read, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use super::{emit_dot, format_lineage_table, format_matrix, parse_input};
use crate::threaded::{tgb, Outcome, TgbOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE_ERROR: i32 = 1;
pub const EXIT_INVALID_ARGS: i32 = 2;

/// Compute a Gröbner basis with the threaded Buchberger algorithm and print
/// the lineage table.
#[derive(Debug, Parser)]
#[command(name = "gb", version)]
struct Args {
    /// Number of worker threads [default: available parallelism]
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    /// Single worker, tasks in creation order; reproducible output.
    #[arg(long)]
    deterministic: bool,
    /// Trace task scheduling and basis insertions.
    #[arg(long)]
    verbose: bool,
    /// Replace the table by the reduced Gröbner basis.
    #[arg(long, conflicts_with = "minimalize")]
    reduce: bool,
    /// Replace the table by a minimal Gröbner basis.
    #[arg(long)]
    minimalize: bool,
    /// Print the basis polynomials one per line instead of the table.
    #[arg(long)]
    matrix: bool,
    /// Write the lineage genealogy as a DOT graph.
    #[arg(long, value_name = "FILE")]
    dot: Option<PathBuf>,
    /// Ideal description; standard input when omitted.
    input: Option<PathBuf>,
}

/// Runs the driver on the process's standard streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_cli_with(args, &mut io::stdin().lock(), &mut io::stdout().lock(), &mut io::stderr().lock())
}

pub fn run_cli_with<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_INVALID_ARGS,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    match run(&args, stdin, stdout) {
        Ok(()) => EXIT_OK,
        Err((code, msg)) => {
            let _ = writeln!(stderr, "gb: {msg}");
            code
        }
    }
}

fn run(args: &Args, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<(), (i32, String)> {
    let invalid = |msg: String| (EXIT_INVALID_ARGS, msg);
    let text = match &args.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| invalid(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    let problem = parse_input(&text).map_err(|e| {
        let source = args
            .input
            .as_ref()
            .map_or_else(|| "<stdin>".to_owned(), |p| p.display().to_string());
        (EXIT_PARSE_ERROR, format!("{source}:{e}"))
    })?;

    let threads = match args.threads {
        Some(n) => usize::try_from(n).map_err(|_| invalid("thread count too large".into()))?,
        None => std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
    };
    let options = TgbOptions {
        threads,
        deterministic: args.deterministic,
        verbose: args.verbose,
    };
    let run = tgb(&problem.generators, &problem.ring, &options)
        .map_err(|e| invalid(e.to_string()))?;

    let table = if args.reduce || (run.status.outcome == Outcome::UnitFound && !args.minimalize) {
        run.table.reduce()
    } else if args.minimalize {
        run.table.minimalize()
    } else {
        run.table
    };

    let io_err = |e: io::Error| invalid(format!("write failed: {e}"));
    for line in &run.trace {
        writeln!(stdout, "{line}").map_err(io_err)?;
    }
    let body = if args.matrix {
        format_matrix(&table)
    } else {
        format_lineage_table(&table)
    };
    stdout.write_all(body.as_bytes()).map_err(io_err)?;
    if let Some(path) = &args.dot {
        fs::write(path, emit_dot(&table))
            .map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}
