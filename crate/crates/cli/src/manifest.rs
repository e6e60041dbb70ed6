//! Run manifests: `#`-prefixed comment lines emitted at the top of every
//! output, recording tool version, command, resolved parameters and input
//! digests. Identical manifest + inputs means identical output bytes.

use std::fmt::Display;
use std::path::Path;

use sha2::{Digest, Sha256};

pub struct Manifest {
    lines: Vec<String>,
}

impl Manifest {
    pub fn new(command: &str) -> Self {
        Manifest {
            lines: vec![
                format!("# trop {}", env!("CARGO_PKG_VERSION")),
                format!("# command: {command}"),
            ],
        }
    }

    pub fn param(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push(format!("# param {key}: {value}"));
        self
    }

    pub fn seed(&mut self, seed: Option<u64>) -> &mut Self {
        if let Some(s) = seed {
            self.lines.push(format!("# seed: {s}"));
        }
        self
    }

    pub fn input(&mut self, path: &Path) -> anyhow::Result<&mut Self> {
        let bytes = std::fs::read(path)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
        let digest = Sha256::digest(&bytes);
        self.lines.push(format!("# input {}: sha256:{}", path.display(), hex::encode(digest)));
        Ok(self)
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}
