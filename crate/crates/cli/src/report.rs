use std::fmt;
use std::process::ExitCode;

use omclab::{Error, IntPolynomial, RatPolynomial};
use serde_json::{json, Map, Value};

/// One oracle or consistency check attached to a run.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self { name: name.into(), passed, detail: detail.into() }
    }

    /// A check comparing two renderings of the same quantity.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, got: &T, want: &T) -> Self {
        let passed = got == want;
        let detail = if passed { format!("{got:?}") } else { format!("got {got:?}, expected {want:?}") };
        Self::new(name, passed, detail)
    }

    fn to_json(&self) -> Value {
        json!({ "name": self.name, "passed": self.passed, "detail": self.detail })
    }
}

/// Everything a command produced. `inputs` holds the parsed inputs, not
/// file paths, so equal inputs give equal reports.
#[derive(Debug)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<Check>,
    pub text: Vec<String>,
    pub elapsed_ms: Option<u128>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.into(),
            inputs: Map::new(),
            outputs: Map::new(),
            checks: Vec::new(),
            text: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.into(), value.into());
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.text.push(text.into());
    }

    pub fn check(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("command".into(), self.command.clone().into());
        out.insert("inputs".into(), decimal_strings(Value::Object(self.inputs.clone())));
        out.insert("outputs".into(), decimal_strings(Value::Object(self.outputs.clone())));
        out.insert("checks".into(), self.checks.iter().map(Check::to_json).collect());
        if let Some(ms) = self.elapsed_ms {
            out.insert("timing".into(), json!({ "elapsed_ms": ms.to_string() }));
        }
        Value::Object(out)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.text {
            out.push_str(line);
            out.push('\n');
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("check {}: {status} ({})\n", c.name, c.detail));
        }
        if let Some(ms) = self.elapsed_ms {
            out.push_str(&format!("elapsed: {ms} ms\n"));
        }
        out
    }
}

/// Numbers become decimal strings so that no consumer reads them as floats.
fn decimal_strings(v: Value) -> Value {
    match v {
        Value::Number(n) => Value::String(n.to_string()),
        Value::Array(items) => Value::Array(items.into_iter().map(decimal_strings).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, decimal_strings(v))).collect()),
        other => other,
    }
}

/// Failure classes, each with its exit code.
#[derive(Debug)]
pub enum Failure {
    Parse(String),
    Guard(String),
    Mismatch(String),
    Other(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Failure::Parse(_) => 2,
            Failure::Guard(_) => 3,
            Failure::Mismatch(_) => 4,
            Failure::Other(_) => 1,
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Failure::Parse(_) => "parse",
            Failure::Guard(_) => "guard",
            Failure::Mismatch(_) => "mismatch",
            Failure::Other(_) => "error",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Guard(m) | Failure::Mismatch(m) | Failure::Other(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Parse(_)
            | Error::Json(_)
            | Error::Shape(_)
            | Error::InvalidLabel(_)
            | Error::InvalidPermutation(_) => Failure::Parse(msg),
            Error::DimensionGuard { .. } | Error::GeneratorGuard { .. } | Error::OutOfRange(_) => Failure::Guard(msg),
            Error::Mismatch(_) => Failure::Mismatch(msg),
            _ => Failure::Other(msg),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, Failure>;

/// Ascending coefficients as decimal strings, with a readable form.
pub fn int_poly_json(p: &IntPolynomial, var: char) -> Value {
    json!({ "coefficients": p.to_strings(), "text": int_poly_text(p, var) })
}

pub fn int_poly_text(p: &IntPolynomial, var: char) -> String {
    if var == 'z' {
        format!("{p:#}")
    } else {
        p.to_string()
    }
}

pub fn rat_poly_json(p: &RatPolynomial) -> Value {
    json!({ "coefficients": p.to_strings(), "text": p.to_string() })
}
