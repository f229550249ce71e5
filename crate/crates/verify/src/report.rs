use serde::Serialize;
use std::collections::BTreeMap;

use homology_engine::BettiVector;
use poset_core::SimplicialComplex;

/// One named pass/fail line within an instance.
#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub pass: bool,
    pub info: String,
}

impl CheckLine {
    pub fn new(name: &str, pass: bool, info: impl Into<String>) -> CheckLine {
        CheckLine {
            name: name.to_string(),
            pass,
            info: info.into(),
        }
    }
}

/// A Betti table entry: the reduced vector (or "empty") plus face counts per
/// dimension.
#[derive(Clone, Debug, Serialize)]
pub struct BettiLine {
    pub name: String,
    pub betti: serde_json::Value,
    pub faces: Vec<usize>,
}

impl BettiLine {
    pub fn new(name: &str, betti: &BettiVector, complex: Option<&SimplicialComplex>) -> BettiLine {
        BettiLine {
            name: name.to_string(),
            betti: betti.to_json(),
            faces: complex.map(|k| k.f_vector()).unwrap_or_default(),
        }
    }

    pub fn empty(name: &str) -> BettiLine {
        BettiLine {
            name: name.to_string(),
            betti: serde_json::Value::String("empty".into()),
            faces: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub instance: String,
    pub checks: Vec<CheckLine>,
    pub betti: Vec<BettiLine>,
    pub pass: bool,
}

impl InstanceReport {
    pub fn new(instance: impl Into<String>) -> InstanceReport {
        InstanceReport {
            instance: instance.into(),
            checks: Vec::new(),
            betti: Vec::new(),
            pass: true,
        }
    }

    pub fn check(&mut self, name: &str, pass: bool, info: impl Into<String>) {
        self.pass &= pass;
        self.checks.push(CheckLine::new(name, pass, info));
    }

    /// A line that records data without gating the verdict.
    pub fn note(&mut self, name: &str, info: impl Into<String>) {
        self.checks.push(CheckLine::new(name, true, info));
    }

    pub fn betti_line(&mut self, line: BettiLine) {
        self.betti.push(line);
    }
}

/// Machine-readable suite outcome with stable key order; wall time is kept
/// outside so the body can be checksummed byte-for-byte.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub params: BTreeMap<String, serde_json::Value>,
    pub corpus_hash: String,
    pub instances: Vec<InstanceReport>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(suite: &str, seed: u64) -> VerificationReport {
        VerificationReport {
            schema: 1,
            suite: suite.to_string(),
            seed,
            params: BTreeMap::new(),
            corpus_hash: String::new(),
            instances: Vec::new(),
            pass: true,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<serde_json::Value>) {
        self.params.insert(key.to_string(), value.into());
    }

    pub fn push(&mut self, instance: InstanceReport) {
        self.pass &= instance.pass;
        self.instances.push(instance);
    }

    pub fn extend(&mut self, instances: Vec<InstanceReport>) {
        for i in instances {
            self.push(i);
        }
    }
}
