use std::fmt;

use hopfbrace::report::Check;
use hopfbrace::{Error, VerificationReport};
use serde_json::{json, Map, Value};

/// Exit code 2: the input could not be read or parsed.
/// Exit code 1: the input was read but something failed to verify.
#[derive(Debug)]
pub enum CliError {
    Input(String),
    Failure(String, Option<VerificationReport>),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(..) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "malformed input: {m}"),
            CliError::Failure(m, _) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidField(_) | Error::DimensionMismatch { .. } | Error::FieldMismatch(..) => CliError::Input(e.to_string()),
            Error::VerificationFailure(r) => CliError::Failure("verification failed".into(), Some(*r)),
            other => CliError::Failure(other.to_string(), None),
        }
    }
}

/// A command's checks and computed data.
pub struct Outcome {
    command: String,
    checks: Vec<Check>,
    result: Map<String, Value>,
    lines: Vec<String>,
}

impl Outcome {
    pub fn new(command: &str) -> Self {
        Outcome { command: command.into(), checks: Vec::new(), result: Map::new(), lines: Vec::new() }
    }

    pub fn checks(&mut self, prefix: &str, r: &VerificationReport) -> &mut Self {
        for c in &r.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c.clone() });
        }
        self
    }

    pub fn check(&mut self, name: &str, ok: bool) -> &mut Self {
        self.checks.push(Check { name: name.into(), passed: ok, witness: if ok { None } else { Some(vec![]) } });
        self
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.result.insert(key.into(), v.into());
        self
    }

    pub fn note(&mut self, line: impl Into<String>) -> &mut Self {
        self.lines.push(line.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "passed": self.passed(),
            "checks": self.checks,
            "result": Value::Object(self.result.clone()),
        });
        let mut s = serde_json::to_string_pretty(&v).expect("serializable");
        s.push('\n');
        s
    }

    pub fn summary(&self) -> String {
        let ok = self.checks.iter().filter(|c| c.passed).count();
        let mut s = format!("{}: {ok}/{} checks passed\n", self.command, self.checks.len());
        for c in self.checks.iter().filter(|c| !c.passed) {
            match &c.witness {
                Some(w) if !w.is_empty() => s.push_str(&format!("  FAIL {} at basis tuple {w:?}\n", c.name)),
                _ => s.push_str(&format!("  FAIL {}\n", c.name)),
            }
        }
        for l in &self.lines {
            s.push_str(&format!("  {l}\n"));
        }
        s
    }
}

/// Report emitted when a command aborts.
pub fn error_json(command: &str, e: &CliError) -> String {
    let checks: Vec<Check> = match e {
        CliError::Failure(_, Some(r)) => r.checks.clone(),
        _ => Vec::new(),
    };
    let v = json!({
        "command": command,
        "passed": false,
        "checks": checks,
        "error": e.to_string(),
        "exit_code": e.code(),
    });
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}
