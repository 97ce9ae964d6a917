//! Deterministic rendering of command results.

use std::fmt::Write as _;

use serde::Serialize;

use super::document::render_vector;
use crate::report::CheckReport;
use crate::scalars::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckLine {
            name: name.into(),
            holds: true,
            condition: None,
            witness: None,
            residual: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: Option<String>) -> Self {
        CheckLine {
            name: name.into(),
            holds: false,
            condition: None,
            witness: None,
            residual: detail,
        }
    }

    pub fn expect(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            CheckLine::pass(name)
        } else {
            CheckLine::fail(name, Some(detail()))
        }
    }

    /// Converts a report whose witness indexes `basis` and whose residual is
    /// a coordinate vector (or a single scalar when `scalar` is set).
    pub fn from_report(name: impl Into<String>, r: &CheckReport, basis: &[String], scalar: bool) -> Self {
        let witness = r.witness.as_ref().map(|w| {
            w.iter()
                .map(|&i| basis.get(i).cloned().unwrap_or_else(|| i.to_string()))
                .collect()
        });
        CheckLine {
            name: name.into(),
            holds: r.holds_ok(),
            condition: r.condition.clone(),
            witness,
            residual: r.residual.as_ref().map(|v| render_residual(v, basis, scalar)),
        }
    }
}

fn render_residual(v: &[Scalar], basis: &[String], scalar: bool) -> String {
    if scalar && v.len() == 1 {
        v[0].to_string()
    } else {
        render_vector(v, basis)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

/// Everything a command prints, in a fixed order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub checks: Vec<CheckLine>,
    pub facts: Vec<Fact>,
    /// Expressions assumed nonzero.
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, line: CheckLine) {
        self.checks.push(line);
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.facts.push(Fact {
            key: key.into(),
            value: value.into(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn assume<'a>(&mut self, values: impl IntoIterator<Item = &'a Scalar>) {
        for v in values {
            let s = v.to_string();
            if !self.assumptions.contains(&s) {
                self.assumptions.push(s);
            }
        }
    }

    /// Records a checker report, including its genericity assumptions.
    pub fn add_report(&mut self, name: impl Into<String>, r: &CheckReport, basis: &[String], scalar: bool) -> bool {
        self.assume(&r.assumptions);
        let line = CheckLine::from_report(name, r, basis, scalar);
        let ok = line.holds;
        self.checks.push(line);
        ok
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    /// 0 when every check holds, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_hold() {
            0
        } else {
            1
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "$ {}", self.command).unwrap();
        for c in &self.checks {
            let verdict = if c.holds { "holds" } else { "FAILS" };
            write!(out, "{}: {verdict}", c.name).unwrap();
            if let Some(cond) = &c.condition {
                write!(out, " [{cond}]").unwrap();
            }
            if let Some(w) = &c.witness {
                write!(out, " at ({})", w.join(", ")).unwrap();
            }
            out.push('\n');
            if let Some(r) = &c.residual {
                let label = if c.witness.is_some() { "residual" } else { "detail" };
                writeln!(out, "  {label}: {r}").unwrap();
            }
        }
        for f in &self.facts {
            writeln!(out, "{}: {}", f.key, f.value).unwrap();
        }
        if !self.assumptions.is_empty() {
            writeln!(out, "assuming nonzero: {}", self.assumptions.join(", ")).unwrap();
        }
        for n in &self.notes {
            writeln!(out, "note: {n}").unwrap();
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
