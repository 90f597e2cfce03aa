//! Graph arguments: a `.hg` file, or a construction shorthand such as
//! `complete:3:5`, `fano` or `turan:6:3` when no such file exists.

use std::path::Path;

use hyperlambda_core::hypergraph::Construction;
use hyperlambda_core::Hypergraph;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{input_error, CliError};
use crate::hg;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputKind {
    File,
    Construction,
}

/// Where a graph came from, with the SHA-256 of the file bytes (or of the
/// `.hg` text of a construction).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub source: String,
    pub kind: InputKind,
    pub sha256: String,
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Hypergraph,
    pub digest: InputDigest,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Resolves `source` against `base` (relative paths) or as a shorthand.
pub fn load(source: &str, base: &Path) -> Result<Loaded, CliError> {
    let path = base.join(source);
    if path.is_file() {
        let bytes = std::fs::read(&path).map_err(|e| CliError::io(&path, e))?;
        let text = std::str::from_utf8(&bytes).map_err(|_| input_error!("{source}: not UTF-8 text"))?;
        let graph = hg::parse(text).map_err(|e| input_error!("{source}: {e}"))?;
        let digest = InputDigest { source: source.to_string(), kind: InputKind::File, sha256: sha256_hex(&bytes) };
        return Ok(Loaded { graph, digest });
    }
    let c = Construction::parse(source)
        .map_err(|e| input_error!("{source}: no such file, and not a construction shorthand ({e})"))?;
    let graph = c.build()?;
    let sha256 = sha256_hex(hg::write(&graph).as_bytes());
    Ok(Loaded { graph, digest: InputDigest { source: source.to_string(), kind: InputKind::Construction, sha256 } })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand_and_file() {
        let dir = tempfile::tempdir().unwrap();
        let k = load("complete:3:5", dir.path()).unwrap();
        assert_eq!(k.graph.size(), 10);
        assert_eq!(k.digest.kind, InputKind::Construction);
        std::fs::write(dir.path().join("t.hg"), hg::write(&k.graph)).unwrap();
        let f = load("t.hg", dir.path()).unwrap();
        assert_eq!(f.graph, k.graph);
        assert_eq!(f.digest.sha256, k.digest.sha256);
        std::fs::write(dir.path().join("bad.hg"), "2 3 1\n1 0\n").unwrap();
        let e = load("bad.hg", dir.path()).unwrap_err().to_string();
        assert_eq!(e, "bad.hg: line 2: vertices must be strictly increasing");
        assert!(load("nope.hg", dir.path()).is_err());
    }
}
