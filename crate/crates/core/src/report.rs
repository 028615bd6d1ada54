use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ViolationKind {
    /// An arrow lands in the wrong hom-set.
    Endpoint,
    Identity,
    Associativity,
    Functoriality,
    Naturality,
    Invertibility,
    UnitCoherence,
    CompositionCoherence,
    /// Modification compatibility with the two-cells.
    Compatibility,
    /// A commuting diagram of an internal category fails.
    Diagram,
    /// A cover-class property fails.
    Cover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] {}", self.kind, self.message)
    }
}

/// Outcome of a law check. Empty iff every checked law holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, kind: ViolationKind, message: impl Into<String>) {
        self.violations.push(Violation {
            kind,
            message: message.into(),
        });
    }

    pub fn extend(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }

    /// Prefixes every message, used when nesting reports of constituents.
    pub fn extend_prefixed(&mut self, prefix: &str, other: ValidationReport) {
        self.violations.extend(other.violations.into_iter().map(|v| Violation {
            kind: v.kind,
            message: format!("{prefix}: {}", v.message),
        }));
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn has_kind(&self, kind: ViolationKind) -> bool {
        self.violations.iter().any(|v| v.kind == kind)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return writeln!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Result of a universal-property verifier: a list of named checks and,
/// on failure, the first counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifierReport {
    pub title: String,
    pub checks: Vec<Check>,
    pub counterexample: Option<String>,
}

impl VerifierReport {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            checks: Vec::new(),
            counterexample: None,
        }
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a failed check and keeps the first counterexample.
    pub fn fail(&mut self, label: impl Into<String>, counterexample: impl Into<String>) {
        let counterexample = counterexample.into();
        self.check(label, false, counterexample.clone());
        self.counterexample.get_or_insert(counterexample);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifierReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let tag = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  [{tag}] {}: {}", c.label, c.detail)?;
        }
        if let Some(cx) = &self.counterexample {
            writeln!(f, "  counterexample: {cx}")?;
        }
        writeln!(f, "  verdict: {}", if self.passed() { "verified" } else { "failed" })
    }
}
