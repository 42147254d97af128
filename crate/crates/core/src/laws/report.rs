use std::time::Duration;

use serde_json::{json, Value};

pub const SCHEMA: &str = "rb-shuffle/1";

/// The first failing sample of a suite, rendered so it can be read and
/// replayed with the same seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub index: usize,
    pub lambda: String,
    pub inputs: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: String,
    pub samples: usize,
    pub seed: u64,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    pub wall_time: Option<Duration>,
}

impl LawReport {
    pub fn new(law: impl Into<String>, seed: u64) -> Self {
        LawReport {
            law: law.into(),
            samples: 0,
            seed,
            passed: true,
            counterexample: None,
            wall_time: None,
        }
    }

    pub fn to_json(&self, timings: bool) -> Value {
        let mut v = json!({
            "law": self.law,
            "samples": self.samples,
            "seed": self.seed,
            "passed": self.passed,
        });
        if let Some(c) = &self.counterexample {
            let inputs: Vec<Value> = c.inputs.iter().map(|(k, x)| json!({"name": k, "value": x})).collect();
            let mut cj = json!({
                "index": c.index,
                "lambda": c.lambda,
                "inputs": inputs,
                "lhs": c.lhs,
                "rhs": c.rhs,
            });
            if let Some(n) = &c.note {
                cj["note"] = json!(n);
            }
            v["counterexample"] = cj;
        }
        if timings {
            if let Some(t) = self.wall_time {
                v["wall_ms"] = json!(t.as_millis() as u64);
            }
        }
        v
    }

    /// One line: `PASS name (n samples)` or `FAIL name ...`.
    pub fn summary_line(&self) -> String {
        let time = self
            .wall_time
            .map(|t| format!(", {:.2}s", t.as_secs_f64()))
            .unwrap_or_default();
        if self.passed {
            format!("PASS {} ({} samples{time})", self.law, self.samples)
        } else {
            let c = self.counterexample.as_ref();
            let at = c
                .map(|c| format!(" at sample {} (λ = {})", c.index, c.lambda))
                .unwrap_or_default();
            format!("FAIL {}{at}", self.law)
        }
    }

    pub fn details(&self) -> Option<String> {
        let c = self.counterexample.as_ref()?;
        let mut out = String::new();
        for (k, v) in &c.inputs {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        if let Some(n) = &c.note {
            out.push_str(&format!("  {n}\n"));
        }
        if !c.lhs.is_empty() || !c.rhs.is_empty() {
            out.push_str(&format!("  lhs = {}\n  rhs = {}\n", c.lhs, c.rhs));
        }
        Some(out)
    }
}

pub fn reports_json(reports: &[LawReport], timings: bool) -> Value {
    json!({
        "schema": SCHEMA,
        "reports": reports.iter().map(|r| r.to_json(timings)).collect::<Vec<_>>(),
    })
}
