use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// One named pass/fail line of a structural check, with an optional witness
/// point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<f64>>,
}

impl CheckLine {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, CheckStatus::Pass, detail, None)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>, witness: Option<Vec<f64>>) -> Self {
        Self::new(name, CheckStatus::Fail, detail, witness)
    }

    pub fn not_applicable(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self::new(name, CheckStatus::NotApplicable, detail, None)
    }

    pub fn new(
        name: impl Into<String>,
        status: CheckStatus,
        detail: impl Into<String>,
        witness: Option<Vec<f64>>,
    ) -> Self {
        Self {
            name: name.into(),
            status,
            detail: detail.into(),
            witness,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}
