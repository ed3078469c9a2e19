//! Condition-by-condition reports shared by the hypothesis checkers.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Not decidable from the data at hand (truncation, missing model).
    Abstain,
    /// The condition is vacuous or gated off.
    NotApplicable,
}

impl CheckStatus {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Abstain => "abstain",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckItem {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

impl CheckItem {
    pub fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        CheckItem {
            name: name.to_string(),
            status,
            detail: detail.into(),
        }
    }
}

/// True when no item failed or abstained.
pub fn all_established(items: &[CheckItem]) -> bool {
    items
        .iter()
        .all(|i| matches!(i.status, CheckStatus::Pass | CheckStatus::NotApplicable))
}
