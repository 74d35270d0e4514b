use std::fmt;

use serde::Serialize;

/// One named identity together with the first basis tuple where it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

/// Ordered list of axiom checks. `passed` holds exactly when `witness` is absent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(&mut self, name: impl Into<String>, witness: Option<Vec<usize>>) {
        self.checks.push(Check { name: name.into(), passed: witness.is_none(), witness });
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.record(name, None);
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(Check { name: format!("{prefix}{}", c.name), ..c });
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  [pass] {}", c.name)?,
                Some(w) => writeln!(f, "  [FAIL] {} at {:?}", c.name, w)?,
            }
        }
        Ok(())
    }
}

/// Runs `test` over every tuple in `0..n` of length `arity` (lexicographic),
/// returning the first tuple where it is false.
pub(crate) fn first_failure(n: usize, arity: usize, mut test: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut idx = vec![0usize; arity];
    if n == 0 && arity > 0 {
        return None;
    }
    loop {
        if !test(&idx) {
            return Some(idx);
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return None;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}
