//! Run manifests: everything needed to re-execute a run and check that it
//! reproduces the same bytes.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::commands::{execute, Exit, Invocation, Outcome};
use crate::error::{input_error, CliError};
use crate::input::{sha256_hex, InputDigest};
use crate::output::{to_json, SCHEMA_VERSION};

pub const TOOL: &str = "hyperlambda";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub command: String,
    pub invocation: Invocation,
    pub rng_seed: u64,
    /// Worker threads used; outputs do not depend on it.
    pub workers: usize,
    /// Relative input and output paths are taken against this directory.
    pub working_directory: PathBuf,
    pub inputs: Vec<InputDigest>,
    pub output_sha256: String,
    pub exit_code: u8,
    pub wall_time_seconds: f64,
}

impl RunManifest {
    pub fn record(
        invocation: &Invocation,
        outcome: &Outcome,
        workers: usize,
        working_directory: &Path,
        wall_time_seconds: f64,
    ) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION,
            tool: TOOL.into(),
            tool_version: TOOL_VERSION.into(),
            command: invocation.name().into(),
            invocation: invocation.clone(),
            rng_seed: invocation.seed(),
            workers,
            working_directory: working_directory.to_path_buf(),
            inputs: outcome.inputs.clone(),
            output_sha256: sha256_hex(outcome.stdout.as_bytes()),
            exit_code: outcome.exit.code(),
            wall_time_seconds,
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let m: RunManifest =
            serde_json::from_str(&text).map_err(|e| input_error!("{}: not a run manifest ({e})", path.display()))?;
        if m.schema_version != SCHEMA_VERSION {
            return Err(input_error!(
                "{}: manifest schema version {} is not supported (expected {SCHEMA_VERSION})",
                path.display(),
                m.schema_version
            ));
        }
        Ok(m)
    }

    pub fn to_json(&self) -> Result<String, CliError> {
        to_json(self)
    }
}

/// Result of re-running a manifest.
#[derive(Debug, Clone, PartialEq)]
pub struct Replay {
    pub outcome: Outcome,
    /// Whether the output hashes to the recorded digest.
    pub identical: bool,
}

/// Re-executes `m`. Inputs whose digest changed are an input error.
pub fn replay(m: &RunManifest) -> Result<Replay, CliError> {
    let outcome = execute(&m.invocation, &m.working_directory)?;
    for (now, then) in outcome.inputs.iter().zip(&m.inputs) {
        if now != then {
            return Err(input_error!(
                "input {} changed since the recorded run (sha256 {} was {})",
                now.source,
                now.sha256,
                then.sha256
            ));
        }
    }
    if outcome.inputs.len() != m.inputs.len() {
        return Err(input_error!("the run now reads {} input(s), the manifest lists {}", outcome.inputs.len(), m.inputs.len()));
    }
    let identical = sha256_hex(outcome.stdout.as_bytes()) == m.output_sha256 && outcome.exit.code() == m.exit_code;
    Ok(Replay { outcome, identical })
}

impl Replay {
    pub fn exit(&self) -> Exit {
        if self.identical {
            self.outcome.exit
        } else {
            Exit::Violation
        }
    }
}
