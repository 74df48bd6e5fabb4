use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use typeb_cli::{
    cmd_egf, cmd_table, cmd_verify, oeis_check, CliError, EgfName, Format, OeisSequence,
    TableFamily, VerificationReport, DEFAULT_TABLE_N, DEFAULT_VERIFY_N, EXIT_FAIL, EXIT_PASS,
    EXIT_USAGE,
};
use typeb_core::series::default_order;

/// Exact Stirling, Cauchy, Lah and Lah-Bell numbers of types A and B.
#[derive(Parser)]
#[command(name = "typeb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a triangle, or a sequence as a single row.
    Table {
        family: TableFamily,
        #[arg(long = "n", default_value_t = DEFAULT_TABLE_N)]
        n: usize,
        #[arg(long, default_value = "markdown")]
        format: Format,
    },
    /// Check one identity, or `all`, for every n up to the bound.
    Verify {
        identity: String,
        #[arg(long = "n", default_value_t = DEFAULT_VERIFY_N)]
        n: usize,
    },
    /// Compare a triangle against a vendored OEIS b-file.
    OeisCheck {
        sequence: OeisSequence,
        #[arg(long)]
        fixture: PathBuf,
    },
    /// Print EGF coefficients and the n!-scaled sequence.
    Egf {
        name: EgfName,
        /// Truncation order; defaults to the library's series order.
        #[arg(long)]
        order: Option<usize>,
    },
}

/// Writes to stdout; a closed pipe (e.g. `| head`) ends output quietly.
fn emit(text: impl std::fmt::Display) {
    let mut out = std::io::stdout().lock();
    if write!(out, "{text}").and_then(|()| out.flush()).is_err() {
        std::process::exit(EXIT_PASS);
    }
}

fn report(reports: &[VerificationReport]) -> i32 {
    for r in reports {
        emit(format_args!("{r}\n"));
    }
    if reports.iter().all(VerificationReport::passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Table { family, n, format } => {
            emit(cmd_table(family, n).render(format));
            Ok(EXIT_PASS)
        }
        Command::Verify { identity, n } => Ok(report(&cmd_verify(&identity, n)?)),
        Command::OeisCheck { sequence, fixture } => Ok(report(&[oeis_check(sequence, &fixture)?])),
        Command::Egf { name, order } => {
            emit(cmd_egf(name, order.unwrap_or_else(default_order))?);
            Ok(EXIT_PASS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
