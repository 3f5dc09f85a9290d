//! Verdicts with witnesses.

use serde::Serialize;

use crate::linalg::{unflatten, LinMap};

/// One named check and, when it fails, a concrete witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            holds,
            witness: if holds { None } else { witness.or_else(|| Some("unspecified".into())) },
        });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.push(name, true, None);
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.push(name, false, Some(witness.into()));
    }

    /// Records whether two maps agree, naming the first differing basis element.
    pub fn compare(&mut self, name: &str, lhs: &LinMap, rhs: &LinMap, basis: &dyn Fn(usize) -> String) {
        match lhs.first_difference(rhs) {
            None => self.pass(name),
            Some(j) => self.fail(name, basis(j)),
        }
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn holds(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.holds)
    }

    /// Appends every check of `other`, prefixing its name.
    pub fn absorb(&mut self, prefix: &str, other: CheckReport) {
        for c in other.checks {
            self.checks.push(Check {
                name: format!("{prefix}{}", c.name),
                ..c
            });
        }
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

/// Label of a flattened tensor basis element, e.g. `x⊗g⊗1`.
pub fn tensor_label(idx: usize, legs: &[&[String]]) -> String {
    let dims: Vec<usize> = legs.iter().map(|l| l.len()).collect();
    unflatten(idx, &dims)
        .iter()
        .zip(legs)
        .map(|(i, l)| l[*i].as_str())
        .collect::<Vec<_>>()
        .join("⊗")
}

/// Default labels `prefix0, prefix1, …`.
pub fn numbered(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// Human-readable linear combination, e.g. `g - 1` or `2·x + gx`.
pub fn format_vector(v: &crate::linalg::SVec, labels: &[String]) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (i, c)) in v.iter().enumerate() {
        let text = c.to_string();
        let (neg, mag) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_string()),
            None => (false, text),
        };
        let term = if mag == "1" {
            labels[*i].clone()
        } else {
            format!("{mag}·{}", labels[*i])
        };
        match (k, neg) {
            (0, false) => out.push_str(&term),
            (0, true) => {
                out.push('-');
                out.push_str(&term);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&term);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&term);
            }
        }
    }
    out
}
