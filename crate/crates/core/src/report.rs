//! Outcome records for verification sweeps.

use serde::Serialize;

use crate::congruence::ProgressionSpec;

/// At most this many failures are kept per report; `failed` still counts all.
pub const MAX_REPORTED_FAILURES: usize = 25;

/// What a report is about: a progression claim or a named check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Subject {
    Progression(ProgressionSpec),
    Check { id: String },
}

impl Subject {
    pub fn check(id: impl Into<String>) -> Self {
        Subject::Check { id: id.into() }
    }

    pub fn label(&self) -> &str {
        match self {
            Subject::Progression(spec) => &spec.label,
            Subject::Check { id } => id,
        }
    }
}

/// One counterexample. For congruences `value` is the residue and `expected`
/// is `"0"`; for identities they are the two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub n: u64,
    pub argument: u64,
    pub value: String,
    pub expected: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub spec: Subject,
    pub checked: u64,
    pub skipped: u64,
    pub failed: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn label(&self) -> &str {
        self.spec.label()
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let mut line = format!(
            "[{status}] {} checked={} skipped={} failed={}",
            self.label(),
            self.checked,
            self.skipped,
            self.failed
        );
        if let Some(f) = self.failures.first() {
            line.push_str(&format!(
                " first: n={} arg={} value={} expected={}",
                f.n, f.argument, f.value, f.expected
            ));
            if let Some(l) = &f.label {
                line.push_str(&format!(" ({l})"));
            }
        }
        line
    }
}

/// Accumulates check outcomes into a [`VerificationReport`].
#[derive(Debug)]
pub struct ReportBuilder {
    spec: Subject,
    checked: u64,
    skipped: u64,
    failed: u64,
    failures: Vec<Failure>,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub fn new(spec: Subject) -> Self {
        Self {
            spec,
            checked: 0,
            skipped: 0,
            failed: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn pass(&mut self) {
        self.checked += 1;
    }

    pub fn fail(&mut self, failure: Failure) {
        self.checked += 1;
        self.failed += 1;
        self.failures.push(failure);
    }

    /// Records a check; the failure is only built when `ok` is false.
    pub fn record(&mut self, ok: bool, failure: impl FnOnce() -> Failure) {
        if ok {
            self.pass();
        } else {
            self.fail(failure());
        }
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(mut self) -> VerificationReport {
        self.failures.sort_by_key(|f| (f.n, f.argument));
        self.failures.truncate(MAX_REPORTED_FAILURES);
        VerificationReport {
            spec: self.spec,
            checked: self.checked,
            skipped: self.skipped,
            failed: self.failed,
            passed: self.failed == 0,
            failures: self.failures,
            notes: self.notes,
        }
    }
}
