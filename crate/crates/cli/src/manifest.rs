use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct OutputDigest {
    /// File name inside the output directory, or `-` for stdout.
    pub path: String,
    pub sha256: String,
    pub bytes: String,
}

impl OutputDigest {
    pub fn of(path: &str, content: &[u8]) -> Self {
        Self {
            path: path.to_string(),
            sha256: hex::encode(Sha256::digest(content)),
            bytes: content.len().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub schema_version: &'static str,
    pub tool: &'static str,
    pub version: &'static str,
    pub command_line: Vec<String>,
    pub subcommand: String,
    pub sets: Vec<String>,
    pub parameters: BTreeMap<String, String>,
    pub outputs: Vec<OutputDigest>,
    pub exit_code: String,
    /// The only field that varies between identical runs.
    pub wall_time_seconds: String,
}

impl RunManifest {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
