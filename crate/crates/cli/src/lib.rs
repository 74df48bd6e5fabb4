//! Command implementations behind the `typeb` binary.
//!
//! Each command returns plain data ([`OutputTable`], [`VerificationReport`],
//! [`EgfOutput`]) so it can be tested without spawning the process.

pub mod bfile;
pub mod egf;
pub mod table;

use std::path::PathBuf;

use thiserror::Error;

pub use bfile::{oeis_check, parse_bfile, OeisSequence};
pub use egf::{cmd_egf, EgfName, EgfOutput};
pub use table::{cmd_table, Format, OutputTable, TableFamily};
pub use typeb_core::verify::{Identity, VerificationReport};

/// Process exit status for a passing run.
pub const EXIT_PASS: i32 = 0;
/// Process exit status when a verification finds a counterexample.
pub const EXIT_FAIL: i32 = 1;
/// Process exit status for bad arguments or unreadable input.
pub const EXIT_USAGE: i32 = 2;

/// Default `n` for `verify`.
pub const DEFAULT_VERIFY_N: usize = 30;
/// Default `n` for `table`.
pub const DEFAULT_TABLE_N: usize = 7;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] typeb_core::Error),

    #[error("malformed b-file at line {line}: {reason}")]
    MalformedFixture { line: usize, reason: String },

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("unknown {kind} `{tag}`")]
    Unknown { kind: &'static str, tag: String },
}

/// `verify <identity|all>`: one report per identity checked.
pub fn cmd_verify(identity: &str, n_max: usize) -> Result<Vec<VerificationReport>, CliError> {
    if identity == "all" {
        return Ok(typeb_core::verify::run_all(n_max));
    }
    let id: Identity = identity.parse()?;
    Ok(vec![id.run(n_max)])
}
