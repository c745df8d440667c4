//! Pass/fail reports shared by all verifiers.

use serde::Serialize;

/// One failing case.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Failure {
    pub boundary: String,
    pub lhs: String,
    pub rhs: String,
}

impl Failure {
    pub fn new(boundary: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Failure { boundary: boundary.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
    }
}

/// Outcome of a verification sweep.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Report {
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn merge(&mut self, other: Report) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }

    /// Count one check, recording a failure when `lhs != rhs`.
    pub fn check<T: PartialEq + ToString>(&mut self, boundary: impl FnOnce() -> String, lhs: &T, rhs: &T) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure::new(boundary(), lhs.to_string(), rhs.to_string()));
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl FromIterator<Report> for Report {
    fn from_iter<I: IntoIterator<Item = Report>>(iter: I) -> Self {
        iter.into_iter().fold(Report::default(), |mut a, b| {
            a.merge(b);
            a
        })
    }
}
