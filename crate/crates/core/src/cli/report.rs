use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::homcore::{Status, VerificationReport};

pub const TOOL: &str = concat!("homhopf ", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WitnessEntry {
    pub tuple: Vec<usize>,
    pub residual: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Machine-readable outcome of one command. Field order is fixed, so the
/// JSON text depends only on the inputs and the tool version.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportFile {
    pub format_version: u32,
    pub tool: &'static str,
    pub command: String,
    pub input_digest: String,
    pub field: String,
    pub seed: Option<u64>,
    pub strict: bool,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, serde_json::Value>,
    pub verdict: &'static str,
}

/// SHA-256 over the inputs, each prefixed by its length.
pub fn digest(inputs: &[&[u8]]) -> String {
    let mut h = Sha256::new();
    for i in inputs {
        h.update((i.len() as u64).to_le_bytes());
        h.update(i);
    }
    format!("sha256:{}", hex::encode(h.finalize()))
}

impl ReportFile {
    pub fn new(command: &str, input_digest: String, field: String, seed: Option<u64>, strict: bool) -> Self {
        ReportFile {
            format_version: super::format::FORMAT_VERSION,
            tool: TOOL,
            command: command.to_string(),
            input_digest,
            field,
            seed,
            strict,
            checks: Vec::new(),
            details: BTreeMap::new(),
            verdict: "pass",
        }
    }

    /// Appends the checks of a verification report under `prefix`.
    pub fn add(&mut self, prefix: &str, r: &VerificationReport) {
        for c in &r.checks {
            let name = if prefix.is_empty() { c.name.clone() } else { format!("{prefix}/{}", c.name) };
            self.checks.push(CheckEntry {
                name,
                status: c.status.as_str(),
                witness: c.witness.as_ref().map(|w| WitnessEntry {
                    tuple: w.tuple.clone(),
                    residual: w.residual.iter().map(ToString::to_string).collect(),
                }),
                note: c.note.clone(),
            });
        }
        self.update_verdict();
    }

    pub fn detail(&mut self, key: &str, value: serde_json::Value) {
        self.details.insert(key.to_string(), value);
    }

    fn update_verdict(&mut self) {
        let fail = Status::Fail.as_str();
        let skipped = Status::Skipped.as_str();
        let failed = self.checks.iter().any(|c| c.status == fail || (self.strict && c.status == skipped));
        self.verdict = if failed {
            "fail"
        } else if self.checks.iter().any(|c| c.status == skipped) {
            "pass_with_skips"
        } else {
            "pass"
        };
    }

    pub fn passed(&self) -> bool {
        self.verdict != "fail"
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}  field {}", self.tool, self.command, self.field);
        if let Some(seed) = self.seed {
            out.push_str(&format!("  seed {seed}"));
        }
        out.push_str(&format!("\ninput {}\n", self.input_digest));
        for c in &self.checks {
            out.push_str(&format!("{:<8} {}", c.status.to_uppercase(), c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!("  at {:?} residual [{}]", w.tuple, w.residual.join(", ")));
            }
            if let Some(n) = &c.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
        }
        for (k, v) in &self.details {
            out.push_str(&format!("{k}: {v}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}
