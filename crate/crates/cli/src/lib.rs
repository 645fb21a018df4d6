//! Command-line layer over `billiard-core`: family lookup, parallel oracle
//! sweeps, timing, the coefficient tables and JSON/text reports.

pub mod bench;
pub mod commands;
mod error;
pub mod family;
pub mod report;
pub mod sweep;
pub mod tables;

pub use error::{CliError, Result};

/// Value of the top-level `"schema"` field in JSON output.
pub const SCHEMA: &str = "billiard-cli/1";
