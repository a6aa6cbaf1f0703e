//! Structured outcome records for identity and conjecture checks.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// Outcome of one check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

impl Outcome {
    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Whether a failing check signals an implementation bug (theorem) or a
/// publishable finding (conjecture).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CheckClass {
    Theorem,
    Conjecture,
}

impl CheckClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckClass::Theorem => "theorem",
            CheckClass::Conjecture => "conjecture",
        }
    }
}

/// The outcome record of one identity or conjecture check.
///
/// Invariant: `Fail` carries a witness, `Pass` never does.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub class: CheckClass,
    pub params: BTreeMap<String, String>,
    pub outcome: Outcome,
    pub witness: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn pass(check: &str, class: CheckClass, params: BTreeMap<String, String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            class,
            params,
            outcome: Outcome::Pass,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(
        check: &str,
        class: CheckClass,
        params: BTreeMap<String, String>,
        witness: String,
    ) -> Self {
        VerificationReport {
            check: check.to_string(),
            class,
            params,
            outcome: Outcome::Fail,
            witness: Some(witness),
            elapsed: Duration::ZERO,
        }
    }

    pub fn skipped(check: &str, class: CheckClass, params: BTreeMap<String, String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            class,
            params,
            outcome: Outcome::Skipped,
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn with_elapsed(mut self, elapsed: Duration) -> Self {
        self.elapsed = elapsed;
        self
    }

    pub fn is_pass(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    /// Serializes to the report wire format:
    /// `{"check": ..., "params": {...}, "outcome": ..., "witness": ..., "ms": ...}`.
    /// The check class is recorded under `params["class"]`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let mut params = self.params.clone();
        params.insert("class".to_string(), self.class.as_str().to_string());
        let doc = ReportJson {
            check: &self.check,
            params,
            outcome: self.outcome.as_str(),
            witness: self.witness.as_deref(),
            ms: self.elapsed.as_millis() as u64,
        };
        serde_json::to_value(doc).expect("report serialization cannot fail")
    }

    /// One human-readable line.
    pub fn to_pretty_line(&self) -> String {
        let params: Vec<String> = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut line = format!(
            "[{}] {} ({}) [{}] {} ms",
            self.outcome.as_str().to_uppercase(),
            self.check,
            params.join(", "),
            self.class.as_str(),
            self.elapsed.as_millis()
        );
        if let Some(witness) = &self.witness {
            line.push_str(&format!("\n       witness: {witness}"));
        }
        line
    }
}

#[derive(Serialize)]
struct ReportJson<'a> {
    check: &'a str,
    params: BTreeMap<String, String>,
    outcome: &'a str,
    witness: Option<&'a str>,
    ms: u64,
}

/// Serializes reports as a JSON array, one object per report.
pub fn reports_to_json(reports: &[VerificationReport]) -> String {
    let values: Vec<serde_json::Value> = reports.iter().map(|r| r.to_json_value()).collect();
    serde_json::to_string_pretty(&values).expect("report serialization cannot fail")
}
