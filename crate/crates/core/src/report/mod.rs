//! Verdicts, suite summaries and their JSON / SVG renderings.

pub mod svg;

use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::Error;

/// Named witness values, kept in insertion order so JSON output is stable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness(pub Vec<(String, String)>);

impl Witness {
    pub fn new() -> Self {
        Witness(Vec::new())
    }

    pub fn with(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.0.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.0.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
    Degenerate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Degenerate => "degenerate",
        })
    }
}

/// Outcome of one check. A failing verdict always carries a witness; a
/// degenerate one names the construction step that broke down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub note: String,
}

impl Verdict {
    pub fn holds(note: impl Into<String>) -> Self {
        Verdict { status: Status::Holds, witness: None, note: note.into() }
    }

    pub fn holds_with(witness: Witness, note: impl Into<String>) -> Self {
        Verdict { status: Status::Holds, witness: Some(witness), note: note.into() }
    }

    pub fn fails(witness: Witness, note: impl Into<String>) -> Self {
        Verdict { status: Status::Fails, witness: Some(witness), note: note.into() }
    }

    pub fn degenerate(step: impl Into<String>) -> Self {
        Verdict { status: Status::Degenerate, witness: None, note: step.into() }
    }

    /// Maps construction errors to degenerate verdicts and passes others on.
    pub fn from_error(err: Error) -> Result<Self, Error> {
        match err {
            Error::Degenerate { step } => Ok(Verdict::degenerate(step)),
            Error::Domain(msg) => Ok(Verdict::degenerate(msg)),
            Error::Precision(msg) => Ok(Verdict::degenerate(format!("{PRECISION_NOTE}{msg}"))),
            other => Err(other),
        }
    }

    /// Degenerate only because truncation hid the answer.
    pub fn is_precision_loss(&self) -> bool {
        self.status == Status::Degenerate && self.note.starts_with(PRECISION_NOTE)
    }

    pub fn is_holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.status == Status::Fails
    }
}

const PRECISION_NOTE: &str = "precision: ";

/// Aggregate of a sampled suite; field order is the published JSON schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub theorem: String,
    pub variant: String,
    pub system: String,
    pub n: u64,
    pub seed: u64,
    pub holds: u64,
    pub fails: u64,
    pub degenerate: u64,
    pub first_witness: Option<Witness>,
}

impl SuiteReport {
    pub fn new(theorem: &str, variant: &str, system: &str, n: u64, seed: u64) -> Self {
        SuiteReport {
            theorem: theorem.to_string(),
            variant: variant.to_string(),
            system: system.to_string(),
            n,
            seed,
            holds: 0,
            fails: 0,
            degenerate: 0,
            first_witness: None,
        }
    }

    /// Folds verdicts in sample order.
    pub fn absorb<'a>(mut self, verdicts: impl IntoIterator<Item = &'a Verdict>) -> Self {
        for v in verdicts {
            match v.status {
                Status::Holds => self.holds += 1,
                Status::Degenerate => self.degenerate += 1,
                Status::Fails => {
                    self.fails += 1;
                    if self.first_witness.is_none() {
                        self.first_witness = v.witness.clone();
                    }
                }
            }
        }
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}] over {}: n={} seed={} holds={} fails={} degenerate={}",
            self.theorem, self.variant, self.system, self.n, self.seed, self.holds, self.fails, self.degenerate
        )?;
        if let Some(w) = &self.first_witness {
            write!(f, "\n  first witness: {w}")?;
        }
        Ok(())
    }
}

/// Derives an independent per-sample seed so samples can be evaluated in
/// any order (splitmix64 finalizer).
pub fn split_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
