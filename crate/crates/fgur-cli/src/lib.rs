//! Scan runners, CSV/SVG emission and the oracle cross-check behind the
//! `fgur` command-line tool.

use std::fmt;
use std::path::PathBuf;

pub mod oracle;
pub mod output;
pub mod scan;

pub use oracle::{run_oracle_check, run_oracle_check_with, OracleReport};
pub use output::{render_svg, PlotSpec, ScanTable};
pub use scan::{run_cavity_scan, run_unruh_scan, CavityScanSpec, UnruhScanSpec};

/// Process exit code for usage errors.
pub const EXIT_USAGE: i32 = 1;
/// Process exit code for an oracle cross-check failure.
pub const EXIT_ORACLE_MISMATCH: i32 = 2;
/// Process exit code for I/O failures.
pub const EXIT_IO: i32 = 3;

/// Errors surfaced by the command-line layer.
#[derive(Debug)]
pub enum CliError {
    /// Invalid flags or parameter values.
    Usage(String),
    /// The brute-force cross-check exceeded its tolerance.
    OracleMismatch(String),
    /// File I/O failure, with the offending path.
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::OracleMismatch(_) => EXIT_ORACLE_MISMATCH,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::OracleMismatch(msg) => write!(f, "oracle mismatch: {msg}"),
            CliError::Io { path, source } => {
                write!(f, "i/o error on {}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for CliError {}

impl From<fgur_core::Error> for CliError {
    fn from(err: fgur_core::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}
