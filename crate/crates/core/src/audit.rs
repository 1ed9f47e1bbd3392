use std::fmt;

use serde::Serialize;

/// Outcome of a brute-force or sampled check of a family of identities.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AuditReport {
    pub fn new(name: impl Into<String>) -> Self {
        AuditReport {
            name: name.into(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance; `detail` is only evaluated on failure.
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(detail());
        }
    }

    pub fn merge(&mut self, other: AuditReport) {
        self.checked += other.checked;
        self.failures.extend(
            other
                .failures
                .into_iter()
                .map(|f| format!("{}: {}", other.name, f)),
        );
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} failures",
            self.name,
            self.checked,
            self.failures.len()
        )
    }
}
