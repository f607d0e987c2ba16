//! Check reports in text and JSON form.
//!
//! Both renderings are deterministic for fixed input. Wall time is kept on
//! the struct but left out of both renderings so reports compare byte for
//! byte across runs.

use std::time::Duration;

use serde_json::{json, Value};

use crate::cert::{Certificate, Violation};
use crate::exact::fmt_rat;

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Certificate>,
    /// Stop adding checks once one has failed.
    pub first_only: bool,
    /// Checks that were listed but not run because of `first_only`.
    pub not_run: Vec<String>,
    pub wall_time: Option<Duration>,
}

impl Report {
    pub fn new(command: impl Into<String>, first_only: bool) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            first_only,
            not_run: Vec::new(),
            wall_time: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Certificate::passed)
    }

    pub fn stopped(&self) -> bool {
        self.first_only && !self.passed()
    }

    /// Add the certificate produced by `f`, or record `name` as not run.
    pub fn run<E>(&mut self, name: &str, f: impl FnOnce() -> Result<Certificate, E>) -> Result<(), E> {
        if self.stopped() {
            self.not_run.push(name.to_string());
        } else {
            self.checks.push(f()?);
        }
        Ok(())
    }

    pub fn push(&mut self, c: Certificate) {
        if self.stopped() {
            self.not_run.push(c.check);
        } else {
            self.checks.push(c);
        }
    }

    pub fn verdict(&self) -> &'static str {
        if self.passed() {
            "PASS"
        } else {
            "FAIL"
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\n", self.command);
        for c in &self.checks {
            out.push_str(&format!("check {c}\n"));
            if c.skipped > 0 {
                out.push_str(&format!("  skipped: {}\n", c.skipped));
            }
            for n in &c.notes {
                out.push_str(&format!("  note: {n}\n"));
            }
        }
        for n in &self.not_run {
            out.push_str(&format!("not run: {n}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict()));
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "checks": self.checks.iter().map(certificate_json).collect::<Vec<_>>(),
            "not_run": self.not_run,
            "verdict": self.verdict().to_lowercase(),
        })
    }
}

fn violation_json(v: &Violation) -> Value {
    json!({
        "condition": v.condition,
        "indices": v.indices,
        "residual": v.residual.iter().map(fmt_rat).collect::<Vec<_>>(),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "check": c.check,
        "passed": c.passed(),
        "checked": c.checked,
        "failures": c.failures,
        "skipped": c.skipped,
        "first": c.first.as_ref().map(violation_json),
        "notes": c.notes,
    })
}
