//! Check outcomes: verdicts, witnesses, and reports.
//!
//! Every checker in this crate is total over well-formed inputs and reports
//! its outcome instead of erroring. A FAIL always carries a witness naming
//! the first violated law in scan order together with the elements involved,
//! so the violation can be replayed by hand or by a test.

use std::collections::BTreeMap;

use serde::Serialize;

/// Outcome of a check or verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// Preconditions not met; nothing was verified.
    Skip,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// PASS if `ok`, FAIL otherwise.
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Skip => "SKIP",
        };
        f.write_str(s)
    }
}

/// One element participating in a violation, tagged with its role.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessElement {
    /// Role in the violated law, e.g. "x", "a", "r", "threshold".
    pub role: String,
    /// Carrier label (or rendered value) of the element.
    pub label: String,
    /// Carrier index where applicable; rendered values use `None`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
}

/// First violation found by a checker, in deterministic scan order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Stable identifier of the violated law, e.g. "weak_associativity", "C2".
    pub condition: String,
    /// Elements instantiating the violation.
    pub elements: Vec<WitnessElement>,
    /// Rendered left-hand side of the failed comparison, when meaningful.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<String>,
    /// Rendered right-hand side of the failed comparison, when meaningful.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<String>,
    /// Free-form detail for human readers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(condition: impl Into<String>) -> Self {
        Witness {
            condition: condition.into(),
            elements: Vec::new(),
            lhs: None,
            rhs: None,
            note: None,
        }
    }

    pub fn with(mut self, role: &str, label: impl Into<String>, index: Option<usize>) -> Self {
        self.elements.push(WitnessElement {
            role: role.to_string(),
            label: label.into(),
            index,
        });
        self
    }

    pub fn sides(mut self, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        self.lhs = Some(lhs.into());
        self.rhs = Some(rhs.into());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Indices of the witness elements, in role order, for replay in tests.
    pub fn indices(&self) -> Vec<usize> {
        self.elements.iter().filter_map(|e| e.index).collect()
    }
}

/// Result of a single check, serializable for the CLI `--json` mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    /// What was checked, e.g. "hv_module", "st_fuzzy_submodule".
    pub check: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Named boolean side results, e.g. weak_commutative for group checks.
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub properties: BTreeMap<String, bool>,
    /// Reason a verification was skipped, when verdict is SKIP.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
}

impl CheckReport {
    pub fn pass(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Pass,
            witness: None,
            properties: BTreeMap::new(),
            skip_reason: None,
        }
    }

    pub fn fail(check: impl Into<String>, witness: Witness) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Fail,
            witness: Some(witness),
            properties: BTreeMap::new(),
            skip_reason: None,
        }
    }

    pub fn skip(check: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            verdict: Verdict::Skip,
            witness: None,
            properties: BTreeMap::new(),
            skip_reason: Some(reason.into()),
        }
    }

    pub fn with_property(mut self, name: &str, value: bool) -> Self {
        self.properties.insert(name.to_string(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict.passed()
    }
}
