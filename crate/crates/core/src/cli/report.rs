use std::collections::BTreeMap;
use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use crate::cert::{Check, CheckReport};
use crate::error::Error;

/// An input file or catalog object, identified by its canonical hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputRef {
    pub role: String,
    pub kind: String,
    pub hash: String,
}

/// The checks and computed values for one instance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Section {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, Value>,
}

impl Section {
    pub fn new(name: impl Into<String>) -> Section {
        Section {
            name: name.into(),
            instance: None,
            checks: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn with_instance(mut self, hash: impl Into<String>) -> Section {
        self.instance = Some(hash.into());
        self
    }

    pub fn absorb(&mut self, prefix: &str, r: CheckReport) {
        let mut tmp = CheckReport::new();
        tmp.absorb(prefix, r);
        self.checks.extend(tmp.checks);
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) {
        let mut tmp = CheckReport::new();
        tmp.push(name, holds, witness);
        self.checks.extend(tmp.checks);
    }

    pub fn value(&mut self, key: &str, v: impl Into<Value>) {
        self.values.insert(key.to_string(), v.into());
    }

    /// A section holding the single failed check `construction`.
    pub fn from_error(name: impl Into<String>, e: &Error) -> Section {
        let mut s = Section::new(name);
        s.push("construction", false, Some(e.to_string()));
        s
    }

    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

/// Machine-readable outcome of one command.
///
/// Serialization leaves out the wall-clock runtime so that reports for the
/// same inputs and seed are byte-identical.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<InputRef>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub assumed: Vec<String>,
    pub sections: Vec<Section>,
    pub verdict: String,
    #[serde(skip)]
    pub runtime: Duration,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Report {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            seed: None,
            assumed: Vec::new(),
            sections: Vec::new(),
            verdict: String::new(),
            runtime: Duration::ZERO,
        }
    }

    pub fn input(&mut self, role: &str, kind: &str, hash: String) {
        self.inputs.push(InputRef {
            role: role.into(),
            kind: kind.into(),
            hash,
        });
    }

    pub fn assume(&mut self, hypothesis: impl Into<String>) {
        let h = hypothesis.into();
        if !self.assumed.contains(&h) {
            self.assumed.push(h);
        }
    }

    pub fn passed(&self) -> bool {
        self.sections.iter().all(Section::holds)
    }

    /// Fills in the verdict; call once all sections are in.
    pub fn finish(&mut self) {
        self.verdict = if self.passed() { "pass" } else { "fail" }.into();
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Short human-readable summary.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.sections {
            let passed = s.checks.iter().filter(|c| c.holds).count();
            let mark = if s.holds() { "ok  " } else { "FAIL" };
            out.push_str(&format!("{mark} {} ({passed}/{} checks)\n", s.name, s.checks.len()));
            for (k, v) in &s.values {
                out.push_str(&format!("       {k} = {v}\n"));
            }
            for c in s.checks.iter().filter(|c| !c.holds) {
                out.push_str(&format!(
                    "       failed: {} [witness: {}]\n",
                    c.name,
                    c.witness.as_deref().unwrap_or("-")
                ));
            }
        }
        for a in &self.assumed {
            out.push_str(&format!("assumed: {a}\n"));
        }
        out.push_str(&format!(
            "{}: {} in {:.2?}\n",
            self.command,
            if self.passed() { "pass" } else { "fail" },
            self.runtime
        ));
        out
    }
}
