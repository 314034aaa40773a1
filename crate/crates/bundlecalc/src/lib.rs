//! Command-line front end for `bundlecalc-core`: the bundle-expression
//! parser, zero-locus set-up files, and text/JSON rendering.

pub mod cache;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod run;
pub mod setup;

/// Version of the JSON output layout.
pub const SCHEMA_VERSION: u32 = 1;

use cli::{Cli, Format};
use error::CliError;

/// Runs a parsed invocation and renders it in the requested format.
pub fn execute(cli: &Cli) -> Result<String, CliError> {
    let report = run::run(&cli.command)?;
    Ok(match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.json).expect("values are serialisable") + "\n",
        Format::Text => report.text,
    })
}

/// Canonical cache key: the parsed invocation plus the contents of any
/// setup file it reads.
pub fn cache_key(cli: &Cli) -> String {
    let mut key = format!("v{SCHEMA_VERSION}\n{cli:?}");
    if let Some(path) = cli.command.setup_file() {
        key.push('\n');
        key.push_str(&std::fs::read_to_string(path).unwrap_or_default());
    }
    key
}
