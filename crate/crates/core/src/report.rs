//! Pass/fail ledgers produced by every verification battery.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "n/a",
        })
    }
}

/// The input on which an identity failed, with both evaluated sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

/// One named check.
///
/// `truth` records the observed truth value of a condition whose evaluation
/// is informational (e.g. "H is semisimple"); `status` then only says whether
/// the evaluation itself went through.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truth: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            truth: None,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        Check {
            status: Status::Fail,
            witness: Some(witness),
            ..Self::pass(name)
        }
    }

    /// A failure that has no single witnessing element.
    pub fn fail_with(name: impl Into<String>, element: &str, lhs: String, rhs: String) -> Self {
        Self::fail(
            name,
            Witness {
                element: element.to_string(),
                lhs,
                rhs,
            },
        )
    }

    pub fn not_applicable(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check {
            status: Status::NotApplicable,
            detail: Some(why.into()),
            ..Self::pass(name)
        }
    }

    /// An informational truth value; always `Pass`.
    pub fn truth(name: impl Into<String>, value: bool) -> Self {
        Check {
            truth: Some(value),
            ..Self::pass(name)
        }
    }

    /// Pass iff `holds`; a failure records `lhs` and `rhs` at `element`.
    pub fn assert(
        name: impl Into<String>,
        holds: bool,
        element: &str,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        if holds {
            Self::pass(name)
        } else {
            Self::fail_with(name, element, lhs.to_string(), rhs.to_string())
        }
    }

    /// Compare two sides for every labelled input; the first mismatch is the witness.
    pub fn identity<T, I>(name: impl Into<String>, cases: I) -> Self
    where
        T: PartialEq + fmt::Display,
        I: IntoIterator<Item = (String, T, T)>,
    {
        let name = name.into();
        for (label, lhs, rhs) in cases {
            if lhs != rhs {
                return Self::fail_with(name, &label, lhs.to_string(), rhs.to_string());
            }
        }
        Self::pass(name)
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_truth(mut self, value: bool) -> Self {
        self.truth = Some(value);
        self
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    /// Prefix every check name, e.g. `lemma21/` or `taft:3/`.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.checks {
            c.name = format!("{prefix}{}", c.name);
        }
        self
    }

    /// No check failed (not-applicable entries are fine).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Truth value recorded under `name`, if any.
    pub fn truth_of(&self, name: &str) -> Option<bool> {
        self.get(name).and_then(|c| c.truth)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.checks {
            write!(f, "{:<width$}  {:<5}", c.name, c.status.to_string())?;
            if let Some(t) = c.truth {
                write!(f, "  {}", if t { "true" } else { "false" })?;
            }
            if let Some(d) = &c.detail {
                write!(f, "  {d}")?;
            }
            writeln!(f)?;
            if let Some(w) = &c.witness {
                writeln!(f, "    at {}: {}  !=  {}", w.element, w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}
