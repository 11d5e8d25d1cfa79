use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// What one command found, before it is wrapped into a [`RunReport`].
#[derive(Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub violations: BTreeMap<String, usize>,
    pub details: Value,
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn new(pass: bool) -> Outcome {
        Outcome { pass, details: Value::Null, ..Outcome::default() }
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Outcome {
        self.lines.push(text.into());
        self
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub seed: u64,
    pub pass: bool,
    pub violations: BTreeMap<String, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "input: {}", self.input_digest);
        let _ = writeln!(s, "seed: {}", self.seed);
        for line in &self.lines {
            let _ = writeln!(s, "{line}");
        }
        for (axiom, count) in &self.violations {
            let _ = writeln!(s, "violations {axiom}: {count}");
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error: {e}");
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(s, "elapsed: {ms:.3} ms");
        }
        let _ = writeln!(s, "result: {}", if self.pass { "PASS" } else { "FAIL" });
        s
    }

    pub fn json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }
}

/// `sha256:<hex>` over the input files in argument order, each prefixed by its length.
pub fn digest(inputs: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    for bytes in inputs {
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    format!("sha256:{:x}", h.finalize())
}
