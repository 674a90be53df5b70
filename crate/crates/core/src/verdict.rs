use alloc::string::String;
use alloc::vec::Vec;

/// Outcome of one machine-checked identity or inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Every violated instance, one line each.
    Fail(Vec<String>),
    NotApplicable(String),
}

impl Verdict {
    pub fn from_failures(failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail(failures)
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    /// Combines two verdicts; failures accumulate, not-applicable is absorbed by pass.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Fail(mut a), Verdict::Fail(b)) => {
                a.extend(b);
                Verdict::Fail(a)
            }
            (f @ Verdict::Fail(_), _) | (_, f @ Verdict::Fail(_)) => f,
            (Verdict::Pass, _) | (_, Verdict::Pass) => Verdict::Pass,
            (na, _) => na,
        }
    }
}
