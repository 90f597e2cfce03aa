//! File formats, machine-readable output, run manifests and the command
//! layer of the `hyperlambda` binary, on top of [`hyperlambda_core`].
//!
//! Every subcommand is a pure function of a resolved
//! [`commands::Invocation`]; the binary only adds argument parsing, the
//! worker pool and file output. A [`manifest::RunManifest`] stores the
//! invocation so that `hyperlambda replay` can reproduce the output bytes.

pub mod cli;
pub mod commands;
pub mod error;
pub mod hg;
pub mod input;
pub mod manifest;
pub mod output;

pub use error::CliError;
