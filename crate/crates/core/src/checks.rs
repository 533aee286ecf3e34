//! Named pass/fail outcomes shared by the verification reports.

use serde::Serialize;

use crate::characters::ClassFunction;
use crate::symfunc::SymFunc;
use crate::QRat;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// The first counterexample when the check fails.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            detail: Some(detail.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, detail())
        }
    }

    /// Compares two symmetric functions, reporting the first differing term.
    pub fn sym_eq(name: impl Into<String>, lhs: &SymFunc, rhs: &SymFunc) -> Self {
        match lhs.first_difference(rhs) {
            None => Self::pass(name),
            Some((lambda, a, b)) => Self::fail(
                name,
                format!(
                    "coefficient of {}{lambda}: {} vs {}",
                    lhs.basis(),
                    a.to_plain(),
                    b.to_plain()
                ),
            ),
        }
    }

    /// Compares two class functions, reporting the first differing class.
    pub fn class_eq(name: impl Into<String>, lhs: &ClassFunction, rhs: &ClassFunction) -> Self {
        match lhs.first_difference(rhs) {
            None => Self::pass(name),
            Some((mu, a, b)) => Self::fail(
                name,
                format!("class {mu}: {} vs {}", a.to_plain(), b.to_plain()),
            ),
        }
    }

    pub fn rat_eq(name: impl Into<String>, lhs: &QRat, rhs: &QRat) -> Self {
        Self::from_bool(name, lhs == rhs, || {
            format!("{} vs {}", lhs.to_plain(), rhs.to_plain())
        })
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}
