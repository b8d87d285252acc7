//! Verification reports and the JSON matrix literal format.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::object::Object;
use crate::semiring::InvolutiveSemiring;

pub const SCHEMA_VERSION: u32 = 1;

/// A morphism as JSON: object strings plus row-major `[re, im]` entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixLiteral {
    pub dom: Object,
    pub cod: Object,
    pub entries: Vec<Vec<[f64; 2]>>,
}

impl MatrixLiteral {
    pub fn from_morphism<S: InvolutiveSemiring>(f: &Morphism<S>) -> Self {
        MatrixLiteral {
            dom: f.dom().clone(),
            cod: f.cod().clone(),
            entries: f.to_rows().iter().map(|row| row.iter().map(S::to_pair).collect()).collect(),
        }
    }

    pub fn to_morphism<S: InvolutiveSemiring>(&self) -> Result<Morphism<S>> {
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&p| S::from_pair(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Morphism::from_rows(&self.dom, &self.cod, rows)
    }

    /// Parses either a full literal object or a bare list of `[re, im]`
    /// pairs, which is read as a state `I → A` with `A` a generator of that
    /// dimension named `name`.
    pub fn parse(text: &str, name: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if value.is_object() {
            return serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()));
        }
        let pairs: Vec<[f64; 2]> = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        if pairs.is_empty() {
            return Err(Error::Parse("a state needs at least one entry".into()));
        }
        let cod = if pairs.len() == 1 { Object::Unit } else { Object::gen(name, pairs.len()) };
        Ok(MatrixLiteral { dom: Object::Unit, cod, entries: pairs.into_iter().map(|p| vec![p]).collect() })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFail,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::ExpectedFail => "XFAIL",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_name: String,
    pub paper_ref: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<MatrixLiteral>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub model: String,
    pub seed: u64,
    pub tolerance: f64,
    pub trials: usize,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn new(suite: &str, model: &str, seed: u64, tolerance: f64, trials: usize) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_owned(),
            model: model.to_owned(),
            seed,
            tolerance,
            trials,
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, result: CheckResult) {
        self.results.push(result);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.results.extend(other.results);
    }

    /// True when no check has status `fail`.
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.status != Status::Fail)
    }

    pub fn get(&self, check_name: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_name == check_name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "suite {} | model {} | seed {} | trials {} | tolerance {:e}",
            self.suite, self.model, self.seed, self.trials, self.tolerance
        );
        for r in &self.results {
            let _ = write!(out, "{:<5} {}  [{}]", r.status.label(), r.check_name, r.paper_ref);
            if let Some(detail) = &r.detail {
                let _ = write!(out, " - {detail}");
            }
            out.push('\n');
        }
        let fails = self.failures().count();
        let _ = writeln!(out, "{} checks, {} failed", self.results.len(), fails);
        out
    }
}

/// Accumulates the outcome of one named check over many samples. Only the
/// first failure is kept, with its witness.
pub struct Check {
    name: String,
    reference: String,
    expect_failure: bool,
    samples: usize,
    failure: Option<(Vec<MatrixLiteral>, String)>,
    first_sample: Option<Vec<MatrixLiteral>>,
    detail: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, reference: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            reference: reference.into(),
            expect_failure: false,
            samples: 0,
            failure: None,
            first_sample: None,
            detail: None,
        }
    }

    /// Marks the check as a negative result: finding a violation is the
    /// expected outcome.
    pub fn expecting_failure(mut self) -> Self {
        self.expect_failure = true;
        self
    }

    pub fn has_failed(&self) -> bool {
        self.failure.is_some()
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn set_detail(&mut self, detail: impl Into<String>) {
        self.detail = Some(detail.into());
    }

    /// Records one sample. The witness closure runs on failure, and on the
    /// first sample of an expected-failure check.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> Vec<MatrixLiteral>, why: impl FnOnce() -> String) {
        self.samples += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some((witness(), why()));
        } else if self.expect_failure && self.first_sample.is_none() {
            self.first_sample = Some(witness());
        }
    }

    /// Records a sample whose evaluation produced an error.
    pub fn record_result(&mut self, outcome: Result<bool>, witness: impl FnOnce() -> Vec<MatrixLiteral>) {
        match outcome {
            Ok(ok) => self.record(ok, witness, || "identity violated".into()),
            Err(e) => self.record(false, witness, || e.to_string()),
        }
    }

    pub fn finish(self) -> CheckResult {
        let (status, witness, why) = match (self.failure, self.expect_failure) {
            (None, false) => (Status::Pass, None, None),
            (Some((w, why)), false) => (Status::Fail, Some(w), Some(why)),
            (Some((w, why)), true) => (Status::ExpectedFail, Some(w), Some(why)),
            (None, true) => (
                Status::Fail,
                Some(self.first_sample.unwrap_or_default()),
                Some("expected a violation but every sample satisfied the law".into()),
            ),
        };
        let detail = match (why, self.detail) {
            (Some(w), Some(d)) => Some(format!("{w}; {d}")),
            (a, b) => a.or(b),
        };
        CheckResult { check_name: self.name, paper_ref: self.reference, status, witness, detail }
    }
}

pub fn lit<S: InvolutiveSemiring>(f: &Morphism<S>) -> MatrixLiteral {
    MatrixLiteral::from_morphism(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn empty_report_roundtrips() {
        let r = VerificationReport::new("sccc", "fdhilb", 7, 1e-9, 0);
        let json = r.to_json();
        assert!(json.contains("\"schema\": 1"));
        assert_eq!(VerificationReport::from_json(&json).unwrap(), r);
        assert!(r.passed());
    }

    #[test]
    fn failing_check_keeps_first_witness() {
        let f = Morphism::scalar(Complex64::new(1.0, 2.0));
        let mut check = Check::new("demo", "x = x");
        check.record(true, || unreachable!(), || unreachable!());
        check.record(false, || vec![lit(&f)], || "first".into());
        check.record(false, Vec::new, || "second".into());
        let res = check.finish();
        assert_eq!(res.status, Status::Fail);
        assert_eq!(res.witness.unwrap()[0].entries, vec![vec![[1.0, 2.0]]]);
        assert_eq!(res.detail.as_deref(), Some("first"));
    }

    #[test]
    fn expected_failure_statuses() {
        let mut check = Check::new("neg", "no-go").expecting_failure();
        check.record(false, Vec::new, || "found".into());
        assert_eq!(check.finish().status, Status::ExpectedFail);

        let mut check = Check::new("neg", "no-go").expecting_failure();
        check.record(true, Vec::new, String::new);
        let res = check.finish();
        assert_eq!(res.status, Status::Fail);
        assert!(res.witness.is_some());
    }

    #[test]
    fn literal_parses_bare_state() {
        let l = MatrixLiteral::parse("[[1,0],[0,0]]", "Q").unwrap();
        assert_eq!(l.cod, Object::gen("Q", 2));
        let m: Morphism<Complex64> = l.to_morphism().unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(MatrixLiteral::from_morphism(&m), l);
    }

    #[test]
    fn literal_full_form() {
        let text = r#"{"dom":"Q[2]","cod":"I","entries":[[[1,0],[0,-1]]]}"#;
        let m: Morphism<Complex64> = MatrixLiteral::parse(text, "Q").unwrap().to_morphism().unwrap();
        assert_eq!(*m.entry(0, 1), Complex64::new(0.0, -1.0));
        assert!(MatrixLiteral::parse("{\"dom\":\"Q\"}", "Q").is_err());
    }
}
