//! Verdicts with witnesses, rendered as flat `key=value` text.

use std::fmt::Write as _;

use crate::error::{invalid, Result};

/// Bumped whenever the report layout changes.
pub const REPORT_SCHEMA_VERSION: &str = "1.0.0";

pub fn report_schema_version() -> &'static str {
    REPORT_SCHEMA_VERSION
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        }
    }
}

/// Nodes (indices and coordinates) that exhibit a failure.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub label: String,
    pub indices: Vec<usize>,
    pub coords: Vec<Vec<f64>>,
}

impl Witness {
    pub fn new(label: impl Into<String>) -> Self {
        Witness { label: label.into(), indices: Vec::new(), coords: Vec::new() }
    }

    pub fn node(mut self, index: usize, coord: &[f64]) -> Self {
        self.indices.push(index);
        self.coords.push(coord.to_vec());
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub verdict: Verdict,
    pub axiom: Option<String>,
    pub witness: Option<Witness>,
    /// The raw tested quantity at the witness (a second difference, a cycle
    /// sum, a residual gap), not a normalized violation size.
    pub residual: Option<f64>,
    pub fields: Vec<(String, String)>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Pass,
            axiom: None,
            witness: None,
            residual: None,
            fields: Vec::new(),
        }
    }

    pub fn fail(check: impl Into<String>, axiom: impl Into<String>, witness: Witness, residual: Option<f64>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Fail,
            axiom: Some(axiom.into()),
            witness: Some(witness),
            residual,
            fields: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.fields.push((key.into(), value.to_string()));
        self
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }

    pub fn field(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    /// Renames the check while keeping verdict and witness, used when a
    /// composite check forwards a sub-check's failure.
    pub fn renamed(mut self, check: impl Into<String>) -> Self {
        let inner = std::mem::replace(&mut self.check, check.into());
        self.fields.insert(0, ("from".into(), inner));
        self
    }

    fn write_body(&self, out: &mut String) {
        let _ = writeln!(out, "check={}", self.check);
        let _ = writeln!(out, "verdict={}", self.verdict.as_str());
        if let Some(a) = &self.axiom {
            let _ = writeln!(out, "axiom={a}");
        }
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness.label={}", w.label);
            let idx: Vec<String> = w.indices.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "witness.indices={}", idx.join(";"));
            let coords: Vec<String> = w
                .coords
                .iter()
                .map(|c| {
                    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                    format!("({})", parts.join(","))
                })
                .collect();
            let _ = writeln!(out, "witness.coords={}", coords.join(";"));
        }
        if let Some(r) = self.residual {
            let _ = writeln!(out, "residual={r}");
        }
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k}={v}");
        }
    }

    pub fn to_text(&self) -> String {
        render_reports(std::slice::from_ref(self))
    }
}

/// One schema line, then each report's body separated by blank lines.
pub fn render_reports(reports: &[CheckReport]) -> String {
    let mut out = format!("schema_version={REPORT_SCHEMA_VERSION}\n");
    for (k, r) in reports.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        r.write_body(&mut out);
    }
    out
}

/// Rejects report text written under another schema version.
pub fn check_schema(text: &str) -> Result<()> {
    let first = text.lines().next().unwrap_or_default();
    match first.strip_prefix("schema_version=") {
        Some(v) if v == REPORT_SCHEMA_VERSION => Ok(()),
        Some(v) => invalid(format!("report schema {v} does not match {REPORT_SCHEMA_VERSION}")),
        None => invalid("report has no schema_version line"),
    }
}
