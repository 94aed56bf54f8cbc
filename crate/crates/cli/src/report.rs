//! Verdicts, exit codes and the two output formats.

use serde_json::{json, Value};

/// How a command's question was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Decided true, or the construction succeeded.
    True,
    /// Decided false; the report carries a counterexample.
    False,
    /// True only up to a bound, or a cap was reached.
    Bounded,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::True => 0,
            Verdict::False => 1,
            Verdict::Bounded => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Bounded => "bounded",
        }
    }

    /// `holds` decided exactly, or only up to a bound when `bounded`.
    pub fn of(holds: bool, bounded: bool) -> Self {
        match (holds, bounded) {
            (false, _) => Verdict::False,
            (true, false) => Verdict::True,
            (true, true) => Verdict::Bounded,
        }
    }
}

pub const INPUT_ERROR: u8 = 3;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: &'static str,
    pub verdict: Verdict,
    /// The statement the check instantiates, as a short descriptive name.
    pub tag: &'static str,
    pub report: Value,
    /// Extra human-readable lines for the text format.
    pub lines: Vec<String>,
}

impl Outcome {
    pub fn new(command: &'static str, verdict: Verdict, tag: &'static str, report: Value) -> Self {
        Outcome {
            command,
            verdict,
            tag,
            report,
            lines: Vec::new(),
        }
    }

    pub fn line(mut self, l: impl Into<String>) -> Self {
        self.lines.push(l.into());
        self
    }

    pub fn lines(mut self, ls: impl IntoIterator<Item = String>) -> Self {
        self.lines.extend(ls);
        self
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "verdict": self.verdict.as_str(),
            "tag": self.tag,
            "report": self.report,
        });
        serde_json::to_string(&v).expect("values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.command, self.verdict.as_str());
        if !self.tag.is_empty() {
            out.push_str(&format!("checks: {}\n", self.tag));
        }
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

/// An input error as a report, so scripts reading stdout still get JSON.
pub fn error_json(command: &str, message: &str) -> String {
    serde_json::to_string(&json!({"command": command, "verdict": "input-error", "error": message}))
        .expect("values serialize")
}
