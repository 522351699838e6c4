use std::fmt;

use crate::scalar::Scalar;

/// One failed identity instance: which identity, at which basis indices, and
/// the exact nonzero residual (a vector, or a flattened matrix for operator
/// identities).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation<S> {
    pub identity: &'static str,
    pub indices: Vec<usize>,
    pub residual: Vec<S>,
}

/// Outcome of an axiom check. Empty means the check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report<S> {
    pub violations: Vec<Violation<S>>,
}

impl<S> Default for Report<S> {
    fn default() -> Self {
        Report { violations: Vec::new() }
    }
}

impl<S: Scalar> Report<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Records a violation when `residual` is nonzero.
    pub fn record(&mut self, identity: &'static str, indices: &[usize], residual: Vec<S>) {
        if residual.iter().any(|x| !x.is_zero()) {
            self.violations.push(Violation { identity, indices: indices.to_vec(), residual });
        }
    }

    pub fn extend(&mut self, other: Report<S>) {
        self.violations.extend(other.violations);
    }

    pub fn find(&self, identity: &str, indices: &[usize]) -> Option<&Violation<S>> {
        self.violations.iter().find(|v| v.identity == identity && v.indices == indices)
    }

    pub fn summary(&self) -> String {
        match self.violations.first() {
            None => "pass".to_string(),
            Some(v) => format!("{} violation(s), first: {v}", self.violations.len()),
        }
    }
}

impl<S: Scalar> fmt::Display for Violation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}: residual [", self.identity, self.indices)?;
        for (i, x) in self.residual.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}
