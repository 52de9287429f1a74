//! Report records. The text form is one `key: value` per line; the JSON
//! form is a single document. Rationals are always exact strings.

use std::fmt::Write as _;

use degdet_core::exactnum::format_rational;
use degdet_core::verify::VerifyReport;
use degdet_core::Rational;
use serde::Serialize;

fn join(values: &[String]) -> String {
    values.join(", ")
}

pub fn rationals(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

#[derive(Debug, Serialize)]
pub struct DegreeRecord {
    pub ell: usize,
    pub mode: String,
    pub degree: String,
    pub witness_m: Option<usize>,
    pub determinants: Vec<String>,
    /// Interpolant coefficients in powers of `x`, low to high.
    pub coefficients_x: Vec<String>,
    /// Coefficients `b_k` in powers of `(x - xi)`, low to high.
    pub coefficients_b: Vec<String>,
}

impl DegreeRecord {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let witness = self.witness_m.map_or("none".to_string(), |m| m.to_string());
        let _ = writeln!(out, "ell: {}", self.ell);
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "degree: {}", self.degree);
        let _ = writeln!(out, "witness_m: {witness}");
        let _ = writeln!(out, "determinants: {}", join(&self.determinants));
        let _ = writeln!(out, "coefficients_x: {}", join(&self.coefficients_x));
        let _ = writeln!(out, "coefficients_b: {}", join(&self.coefficients_b));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DetRecord {
    pub matrix: String,
    pub direct: String,
    /// `(name, value)` pairs for each available closed form.
    pub closed_forms: Vec<(String, String)>,
    pub agree: bool,
}

impl DetRecord {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "matrix: {}", self.matrix);
        let _ = writeln!(out, "direct: {}", self.direct);
        for (name, value) in &self.closed_forms {
            let _ = writeln!(out, "{name}: {value}");
        }
        let _ = writeln!(out, "agree: {}", self.agree);
        out
    }
}

#[derive(Debug, Serialize)]
pub struct FailureRecord {
    pub inputs: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Serialize)]
pub struct ObservationRecord {
    pub inputs: String,
    pub outcome: String,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub suite: String,
    pub informational: bool,
    pub cases_run: usize,
    pub cases_passed: usize,
    pub failures: Vec<FailureRecord>,
    pub observations: Vec<ObservationRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl ReportRecord {
    /// `elapsed_ms` is only kept when `timing` is set, so default output
    /// stays byte-stable.
    pub fn from_report(report: &VerifyReport, timing: bool) -> Self {
        ReportRecord {
            suite: report.suite.clone(),
            informational: report.informational,
            cases_run: report.cases_run,
            cases_passed: report.cases_passed,
            failures: report
                .failures
                .iter()
                .map(|f| FailureRecord {
                    inputs: f.inputs.clone(),
                    expected: f.expected.clone(),
                    actual: f.actual.clone(),
                })
                .collect(),
            observations: report
                .observations
                .iter()
                .map(|o| ObservationRecord {
                    inputs: o.inputs.clone(),
                    outcome: o.outcome.clone(),
                    detail: o.detail.clone(),
                })
                .collect(),
            elapsed_ms: timing.then_some(report.elapsed_ms),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let _ = writeln!(out, "informational: {}", self.informational);
        let _ = writeln!(out, "cases_run: {}", self.cases_run);
        let _ = writeln!(out, "cases_passed: {}", self.cases_passed);
        let _ = writeln!(out, "failures: {}", self.failures.len());
        for (i, f) in self.failures.iter().enumerate() {
            let _ = writeln!(out, "failure[{i}].inputs: {}", f.inputs);
            let _ = writeln!(out, "failure[{i}].expected: {}", f.expected);
            let _ = writeln!(out, "failure[{i}].actual: {}", f.actual);
        }
        if !self.observations.is_empty() {
            let _ = writeln!(out, "observations: {}", self.observations.len());
        }
        for (i, o) in self.observations.iter().enumerate() {
            let _ = writeln!(out, "observation[{i}].inputs: {}", o.inputs);
            let _ = writeln!(out, "observation[{i}].outcome: {}", o.outcome);
            let _ = writeln!(out, "observation[{i}].detail: {}", o.detail);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed_ms: {ms}");
        }
        out
    }
}
