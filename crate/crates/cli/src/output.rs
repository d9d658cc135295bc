use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use thinquiv::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// What a command prints: a title, listing lines and checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub title: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Outcome {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            passed: true,
            ..Self::default()
        }
    }

    pub fn item(&mut self, line: impl Into<String>) {
        self.items.push(line.into());
    }

    pub fn check(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn report(&mut self, report: Report) {
        report.checks.into_iter().for_each(|c| self.check(c));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Text => {
                let mut out = format!("# {}\n", self.title);
                for line in &self.items {
                    writeln!(out, "{line}").unwrap();
                }
                for c in &self.checks {
                    writeln!(out, "{c}").unwrap();
                }
                let failed = self.checks.iter().filter(|c| !c.passed).count();
                let status = if self.passed { "PASS" } else { "FAIL" };
                writeln!(
                    out,
                    "{status}: {} checks, {failed} failed",
                    self.checks.len()
                )
                .unwrap();
                out
            }
        }
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}
