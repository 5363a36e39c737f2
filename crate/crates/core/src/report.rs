//! Result records shared by every verification suite.

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    /// Counts one case and records it as failed when `lhs != rhs`.
    pub fn check<T: PartialEq>(
        &mut self,
        input: impl FnOnce() -> String,
        lhs: &T,
        rhs: &T,
        show: impl Fn(&T) -> String,
    ) {
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                input: input(),
                lhs: show(lhs),
                rhs: show(rhs),
            });
        }
    }

    pub fn fail(&mut self, input: String, lhs: String, rhs: String) {
        self.failures.push(Failure { input, lhs, rhs });
    }

    pub fn merge(&mut self, other: Report) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}
