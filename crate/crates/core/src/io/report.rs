//! Verification report schema with JSON and flat CSV export.
//!
//! Every float is rounded to 15 significant digits when a record is built,
//! so serializing, parsing and serializing again yields identical text.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::ktree::Outcome;

/// Rounds to 15 significant digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One checked instance. `lambda1` is the observed value and `threshold`
/// the value it is compared against; `margin = lambda1 - threshold`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub check: String,
    pub code: String,
    pub n: usize,
    pub k: Option<usize>,
    pub lambda1: f64,
    pub threshold: f64,
    pub margin: f64,
    pub ktree: Option<Outcome>,
    pub verdict: Verdict,
    pub borderline: bool,
    pub exceptional: bool,
    pub anomaly: bool,
    pub note: Option<String>,
}

impl Record {
    /// A passing record; refine with the builder methods below.
    pub fn new(check: &str, code: impl Into<String>, n: usize, lambda1: f64, threshold: f64) -> Record {
        let (lambda1, threshold) = (sig15(lambda1), sig15(threshold));
        Record {
            check: check.to_string(),
            code: code.into(),
            n,
            k: None,
            lambda1,
            threshold,
            margin: sig15(lambda1 - threshold),
            ktree: None,
            verdict: Verdict::Pass,
            borderline: false,
            exceptional: false,
            anomaly: false,
            note: None,
        }
    }

    pub fn with_k(mut self, k: usize) -> Record {
        self.k = Some(k);
        self
    }

    pub fn with_ktree(mut self, outcome: Outcome) -> Record {
        self.ktree = Some(outcome);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Record {
        self.note = Some(note.into());
        self
    }

    pub fn borderline(mut self, flag: bool) -> Record {
        self.borderline = flag;
        self
    }

    pub fn exceptional(mut self, flag: bool) -> Record {
        self.exceptional = flag;
        self
    }

    /// Marks the record as contradicting the statement under test.
    pub fn failed(mut self, flag: bool) -> Record {
        if flag {
            self.verdict = Verdict::Fail;
            self.anomaly = true;
        }
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    /// Graphs (or instances) examined, including those not recorded.
    pub classes: u64,
    pub records: u64,
    pub pass: u64,
    pub fail: u64,
    pub borderline: u64,
    pub exceptional: u64,
    pub anomalies: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub campaign: String,
    pub parameters: Value,
    pub seed: Option<u64>,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(campaign: &str, parameters: Value, seed: Option<u64>) -> VerificationReport {
        VerificationReport {
            campaign: campaign.to_string(),
            parameters,
            seed,
            records: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, record: Record) {
        self.records.push(record);
    }

    /// Sorts records into canonical order and recomputes the tallies.
    /// `classes` is the number of instances examined.
    pub fn finalize(&mut self, classes: u64) {
        self.records.sort_by(|a, b| {
            (&a.check, &a.code, a.n, a.k, &a.note).cmp(&(&b.check, &b.code, b.n, b.k, &b.note))
        });
        let count = |f: &dyn Fn(&Record) -> bool| self.records.iter().filter(|r| f(r)).count() as u64;
        self.summary = Summary {
            classes,
            records: self.records.len() as u64,
            pass: count(&|r| r.verdict == Verdict::Pass),
            fail: count(&|r| r.verdict == Verdict::Fail),
            borderline: count(&|r| r.borderline),
            exceptional: count(&|r| r.exceptional),
            anomalies: count(&|r| r.anomaly),
        };
    }

    pub fn has_anomalies(&self) -> bool {
        self.summary.anomalies > 0
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<VerificationReport> {
        serde_json::from_str(text).map_err(|e| Error::Report(e.to_string()))
    }

    /// One header line plus one line per record.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.records {
            w.serialize(r).map_err(|e| Error::Report(e.to_string()))?;
        }
        if self.records.is_empty() {
            w.write_record(CSV_HEADER).map_err(|e| Error::Report(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
    }
}

const CSV_HEADER: [&str; 13] = [
    "check", "code", "n", "k", "lambda1", "threshold", "margin", "ktree", "verdict",
    "borderline", "exceptional", "anomaly", "note",
];

/// Parses the output of [`VerificationReport::to_csv`].
pub fn records_from_csv(text: &str) -> Result<Vec<Record>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<std::result::Result<Vec<Record>, _>>()
        .map_err(|e| Error::Report(e.to_string()))
}
