use std::collections::BTreeMap;
use std::fmt::Write as _;

use quadkit::checklist::{CheckItem, CheckStatus};
use serde::Serialize;
use serde_json::Value;

pub const REPORT_SCHEMA: &str = "quadkit/report/v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Truncation or unmet hypotheses: no claim either way.
    Abstain,
    NotApplicable,
}

impl From<CheckStatus> for Verdict {
    fn from(s: CheckStatus) -> Self {
        match s {
            CheckStatus::Pass => Verdict::Pass,
            CheckStatus::Fail => Verdict::Fail,
            CheckStatus::Abstain => Verdict::Abstain,
            CheckStatus::NotApplicable => Verdict::NotApplicable,
        }
    }
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Abstain => "ABSTAIN",
            Verdict::NotApplicable => "N/A",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    pub verdict: Verdict,
    pub witness: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

impl Entry {
    pub fn new(name: impl Into<String>, verdict: Verdict, witness: Value) -> Self {
        Entry {
            name: name.into(),
            verdict,
            witness,
            citation: None,
        }
    }

    pub fn cite(mut self, citation: &str) -> Self {
        self.citation = Some(citation.to_string());
        self
    }

    pub fn from_item(prefix: &str, item: &CheckItem) -> Self {
        Entry::new(
            format!("{prefix}.{}", item.name),
            item.status.into(),
            serde_json::json!({ "detail": item.detail }),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub subcommand: String,
    pub inputs: Vec<String>,
    pub field: String,
    pub cutoff: usize,
    pub hom_cutoff: usize,
    pub seed: u64,
    pub format: String,
    pub params: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub schema: String,
    pub config: ConfigEcho,
    pub entries: Vec<Entry>,
    /// Excluded from determinism comparisons.
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(config: ConfigEcho, entries: Vec<Entry>) -> Self {
        Report {
            tool: "quadkit".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            schema: REPORT_SCHEMA.into(),
            config,
            entries,
            wall_time_ms: 0,
        }
    }

    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Text rendering derived from the JSON form.
    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "{} {} {} (field {}, cutoff {}, hom-cutoff {}, seed {})\n",
            self.tool, self.version, c.subcommand, c.field, c.cutoff, c.hom_cutoff, c.seed
        );
        for (k, v) in &c.params {
            let _ = writeln!(out, "  {k} = {v}");
        }
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        for e in &self.entries {
            let _ = writeln!(out, "{:>8}  {:<width$}  {}", e.verdict.label(), e.name, e.witness);
            if let Some(c) = &e.citation {
                let _ = writeln!(out, "{:>8}  {:<width$}  [{c}]", "", "");
            }
        }
        let _ = writeln!(out, "wall time: {} ms", self.wall_time_ms);
        out
    }
}
