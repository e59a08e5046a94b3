use std::fmt;

use crate::scalar::Field;

/// One failed identity: which axiom, on which basis indices, and the two
/// sides that should have agreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<F> {
    pub label: String,
    pub witness: Vec<usize>,
    pub lhs: Vec<F>,
    pub rhs: Vec<F>,
}

/// Outcome of a validator. `ok()` holds exactly when no violation was
/// recorded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraReport<F> {
    violations: Vec<Violation<F>>,
}

impl<F> Default for AlgebraReport<F> {
    fn default() -> Self {
        AlgebraReport {
            violations: Vec::new(),
        }
    }
}

impl<F: Field> AlgebraReport<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation<F>] {
        &self.violations
    }

    pub fn into_violations(self) -> Vec<Violation<F>> {
        self.violations
    }

    /// Records a violation when `lhs != rhs`; returns whether they agreed.
    pub fn check(&mut self, label: &str, witness: &[usize], lhs: Vec<F>, rhs: Vec<F>) -> bool {
        if lhs == rhs {
            return true;
        }
        self.violations.push(Violation {
            label: label.to_string(),
            witness: witness.to_vec(),
            lhs,
            rhs,
        });
        false
    }

    pub fn push(&mut self, v: Violation<F>) {
        self.violations.push(v);
    }

    /// Appends another report, prefixing its labels.
    pub fn absorb(&mut self, prefix: &str, other: AlgebraReport<F>) {
        for mut v in other.violations {
            if !prefix.is_empty() {
                v.label = format!("{prefix}:{}", v.label);
            }
            self.violations.push(v);
        }
    }

    /// Distinct labels in first-seen order.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for v in &self.violations {
            if !out.contains(&v.label.as_str()) {
                out.push(&v.label);
            }
        }
        out
    }

    /// Sorts violations by label, then witness, for deterministic output.
    pub fn sort(&mut self) {
        self.violations.sort_by(|a, b| {
            a.label
                .cmp(&b.label)
                .then_with(|| a.witness.cmp(&b.witness))
        });
    }
}

impl<F: Field> fmt::Display for AlgebraReport<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return write!(f, "ok");
        }
        write!(f, "{} violation(s)", self.violations.len())?;
        for v in self.violations.iter().take(3) {
            write!(
                f,
                "; {} at {:?}: {:?} != {:?}",
                v.label, v.witness, v.lhs, v.rhs
            )?;
        }
        Ok(())
    }
}
