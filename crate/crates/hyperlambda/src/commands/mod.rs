//! The subcommands as pure functions of a fully resolved [`Invocation`].
//!
//! An invocation carries every parameter a run depends on, so a manifest that
//! stores it can re-execute the run and reproduce the output byte for byte.
//! Nothing here touches stdout or the file system except to read inputs;
//! files to be written come back in [`Outcome::files`].

mod lambda;
mod oracle;
mod sequence;
mod sweep;
mod verify;

use std::path::{Path, PathBuf};

use hyperlambda_core::Hypergraph;
use serde::{Deserialize, Serialize};

pub use lambda::LambdaArgs;
pub use oracle::OracleArgs;
pub use sequence::{parse_orders, PropertyKind, SequenceArgs};
pub use sweep::{SweepArgs, DEFAULT_ALPHAS};
pub use verify::{Suite, VerifyArgs};

use crate::error::CliError;
use crate::hg;
use crate::input::{self, InputDigest, Loaded};

/// Process exit codes; exactly one applies to a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exit {
    Success,
    InputError,
    NotConverged,
    Violation,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::InputError => 1,
            Exit::NotConverged => 2,
            Exit::Violation => 3,
        }
    }

    pub fn from_code(code: u8) -> Option<Exit> {
        [Exit::Success, Exit::InputError, Exit::NotConverged, Exit::Violation]
            .into_iter()
            .find(|e| e.code() == code)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Invocation {
    Lambda(LambdaArgs),
    Verify(VerifyArgs),
    Sequence(SequenceArgs),
    Sweep(SweepArgs),
    Oracle(OracleArgs),
}

impl Invocation {
    pub fn name(&self) -> &'static str {
        match self {
            Invocation::Lambda(_) => "lambda",
            Invocation::Verify(_) => "verify",
            Invocation::Sequence(_) => "sequence",
            Invocation::Sweep(_) => "sweep",
            Invocation::Oracle(_) => "oracle",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Invocation::Lambda(a) => a.solver.rng_seed,
            Invocation::Verify(a) => a.solver.rng_seed,
            Invocation::Sequence(a) => a.enumeration.rng_seed,
            Invocation::Sweep(a) => a.solver.rng_seed,
            Invocation::Oracle(a) => a.solver.rng_seed,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub exit: Exit,
    pub inputs: Vec<InputDigest>,
    /// Files to write, relative paths taken against the working directory.
    pub files: Vec<(PathBuf, String)>,
}

/// Runs `inv`, resolving relative input paths against `base`.
pub fn execute(inv: &Invocation, base: &Path) -> Result<Outcome, CliError> {
    match inv {
        Invocation::Lambda(a) => lambda::run(a, base),
        Invocation::Verify(a) => verify::run(a, base),
        Invocation::Sequence(a) => sequence::run(a, base),
        Invocation::Sweep(a) => sweep::run(a, base),
        Invocation::Oracle(a) => oracle::run(a, base),
    }
}

/// The graph a document was computed on.
#[derive(Debug, Clone, Serialize)]
pub(crate) struct GraphInfo {
    source: String,
    sha256: String,
    r: usize,
    n: usize,
    m: usize,
}

impl GraphInfo {
    fn of(l: &Loaded) -> Self {
        GraphInfo {
            source: l.digest.source.clone(),
            sha256: l.digest.sha256.clone(),
            r: l.graph.uniformity(),
            n: l.graph.order(),
            m: l.graph.size(),
        }
    }
}

/// Loads the single graph argument of a command.
fn load_one(source: &str, base: &Path) -> Result<(Loaded, Vec<InputDigest>), CliError> {
    let l = input::load(source, base)?;
    let d = vec![l.digest.clone()];
    Ok((l, d))
}

fn witness_text(g: &Hypergraph) -> String {
    hg::write(g)
}
