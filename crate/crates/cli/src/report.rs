//! Verification report plumbing: one uniform record shape for every check,
//! rendered as aligned text or as JSON matching the shipped schema
//! (`schema/verification-report.schema.json`).

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

/// A single measured quantity compared against its tolerance. `pass` is
/// always `measured < tolerance`, so every assertion reads the same way:
/// verdict-style facts are encoded as a defect that must vanish.
#[derive(Debug, Clone, Serialize)]
pub struct Assertion {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub params: BTreeMap<String, f64>,
    pub assertions: Vec<Assertion>,
    pub pass: bool,
    pub seconds: f64,
}

/// Accumulates assertions for one check and stamps the wall time on finish.
pub struct ReportBuilder {
    check: String,
    params: BTreeMap<String, f64>,
    assertions: Vec<Assertion>,
    started: Instant,
    /// When set, replaces the default tolerance of every assertion.
    tol_override: Option<f64>,
}

impl ReportBuilder {
    pub fn new(check: &str, tol_override: Option<f64>) -> ReportBuilder {
        ReportBuilder {
            check: check.into(),
            params: BTreeMap::new(),
            assertions: Vec::new(),
            started: Instant::now(),
            tol_override,
        }
    }

    pub fn param(&mut self, name: &str, value: f64) -> &mut Self {
        self.params.insert(name.into(), value);
        self
    }

    /// Records `measured` against `default_tol` (or the override).
    pub fn assert_below(&mut self, name: &str, measured: f64, default_tol: f64) -> &mut Self {
        let tolerance = self.tol_override.unwrap_or(default_tol);
        self.assertions.push(Assertion {
            name: name.into(),
            measured,
            tolerance,
            pass: measured < tolerance,
        });
        self
    }

    /// Records a boolean fact with fixed tolerance semantics: the measured
    /// defect is 0 when it holds and 1 when it does not.
    pub fn assert_holds(&mut self, name: &str, holds: bool) -> &mut Self {
        self.assertions.push(Assertion {
            name: name.into(),
            measured: if holds { 0.0 } else { 1.0 },
            tolerance: 0.5,
            pass: holds,
        });
        self
    }

    pub fn finish(self) -> VerificationReport {
        let pass = self.assertions.iter().all(|a| a.pass);
        VerificationReport {
            check: self.check,
            params: self.params,
            assertions: self.assertions,
            pass,
            seconds: self.started.elapsed().as_secs_f64(),
        }
    }
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "check: {}", self.check).unwrap();
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k} = {v}"))
                .collect();
            writeln!(out, "params: {}", params.join(", ")).unwrap();
        }
        let width = self
            .assertions
            .iter()
            .map(|a| a.name.len())
            .max()
            .unwrap_or(0);
        for a in &self.assertions {
            writeln!(
                out,
                "  {:width$}  {:>10.3e} < {:.1e}  {}",
                a.name,
                a.measured,
                a.tolerance,
                if a.pass { "ok" } else { "FAIL" },
            )
            .unwrap();
        }
        writeln!(
            out,
            "{} in {:.2}s",
            if self.pass { "pass" } else { "FAIL" },
            self.seconds
        )
        .unwrap();
        out
    }
}
