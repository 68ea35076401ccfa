use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::Write;
use std::time::Instant;

use serde_json::{json, Map, Value};

pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

/// The outcome of one command: named checks plus extra data.
pub struct Report {
    command: String,
    digest: String,
    checks: Vec<CheckLine>,
    details: Map<String, Value>,
    started: Instant,
}

impl Report {
    pub fn new(command: &str, args: &[String], inputs: &[String]) -> Self {
        let mut h = DefaultHasher::new();
        args.hash(&mut h);
        inputs.hash(&mut h);
        Report {
            command: command.to_string(),
            digest: format!("{:016x}", h.finish()),
            checks: Vec::new(),
            details: Map::new(),
            started: Instant::now(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(CheckLine { name: name.into(), passed, witness: None });
    }

    /// A check whose witness is shown only when it fails.
    pub fn check_with(&mut self, name: impl Into<String>, passed: bool, witness: impl FnOnce() -> String) {
        let witness = (!passed).then(witness);
        self.checks.push(CheckLine { name: name.into(), passed, witness });
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "witness": c.witness})).collect();
        json!({
            "command": self.command,
            "inputs": self.digest,
            "passed": self.passed(),
            "checks": checks,
            "details": self.details,
            "timing_ms": self.started.elapsed().as_millis() as u64,
        })
    }

    pub fn print(&self, as_json: bool) {
        let text = if as_json { serde_json::to_string_pretty(&self.to_json()).unwrap_or_default() + "\n" } else { self.render_text() };
        // Ignore a closed pipe, as with `| head`.
        let _ = std::io::stdout().lock().write_all(text.as_bytes());
    }

    fn render_text(&self) -> String {
        let mut out = format!("{} [{}]\n", self.command, self.digest);
        for (k, v) in &self.details {
            match v {
                Value::String(s) => out += &format!("  {k}: {s}\n"),
                other => out += &format!("  {k}: {other}\n"),
            }
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match &c.witness {
                Some(w) => out += &format!("{status} {}: {w}\n", c.name),
                None => out += &format!("{status} {}\n", c.name),
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out += &format!("{} checks, {failed} failed\n", self.checks.len());
        out
    }
}
