//! Run manifests: enough to reproduce a run and compare its output.

use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    pub seed: Option<u64>,
    pub config: serde_json::Value,
    pub wall_clock_secs: f64,
    pub exit_code: u8,
    /// SHA-256 of the bytes printed on stdout, without the trailing newline.
    pub result_sha256: String,
}

impl RunManifest {
    pub fn new(config: &impl Serialize, seed: Option<u64>, output: &str, elapsed: Duration, exit_code: u8) -> Self {
        RunManifest {
            command: std::env::args().collect(),
            seed,
            config: serde_json::to_value(config).unwrap_or(serde_json::Value::Null),
            wall_clock_secs: elapsed.as_secs_f64(),
            exit_code,
            result_sha256: digest(output),
        }
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let text = serde_json::to_string_pretty(self).expect("manifest serializes");
        std::fs::write(path, text + "\n")
    }
}

pub fn digest(output: &str) -> String {
    Sha256::digest(output.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}
