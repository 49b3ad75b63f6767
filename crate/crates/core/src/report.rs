//! Rendering of case reports as canonical JSON or Markdown, and the committed
//! survivor baseline they are checked against.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::axioms::Axiom;
use crate::cases::{CaseId, CaseReport, Survivor, TheoremReport};
use crate::error::{Error, Result};
use crate::weight::GroupType;

const BUILTIN_BASELINE: &str = include_str!("../baseline/survivors.json");

pub fn group_json(g: &GroupType) -> Value {
    json!({
        "name": g.to_string(),
        "simple_factors": g.simple_factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
        "has_central_circle": g.has_central_circle,
        "dim": g.total_group_dim(),
        "rank": g.rank(),
    })
}

fn survivor_json(s: &Survivor) -> Value {
    serde_json::to_value(s).expect("survivors serialize")
}

pub fn case_json(r: &CaseReport) -> Value {
    json!({
        "case_id": r.case_id.as_str(),
        "mode": r.mode.as_str(),
        "group": group_json(&r.group),
        "constraints_applied": r.constraints_applied,
        "survivors": r.survivors.iter().map(survivor_json).collect::<Vec<_>>(),
        "axioms_used": r.axioms_used,
        "discrepancies": r.discrepancies.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
        "status": r.status().as_str(),
    })
}

pub fn theorem_json(t: &TheoremReport) -> Value {
    let families: Vec<Value> = t
        .surviving_families
        .iter()
        .map(|(id, s)| {
            let mut v = survivor_json(s);
            v["case_id"] = json!(id.as_str());
            v
        })
        .collect();
    json!({
        "mode": t.mode.as_str(),
        "reports": t.reports.iter().map(case_json).collect::<Vec<_>>(),
        "theorem": {
            "surviving_families": families,
            "axioms_used": t.axioms_used,
            "status": t.status().as_str(),
        },
    })
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub fn canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn bullet_list(out: &mut String, items: &[String]) {
    if items.is_empty() {
        out.push_str("- none\n");
    }
    for item in items {
        let _ = writeln!(out, "- {item}");
    }
}

pub fn case_markdown(r: &CaseReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## {} ({})\n", r.case_id, r.status().as_str());
    let _ = writeln!(out, "- argument: {}", r.case_id.argument());
    let _ = writeln!(out, "- mode: {}", r.mode);
    let _ = writeln!(
        out,
        "- group: {} (dim {}, rank {})",
        r.group,
        r.group.total_group_dim(),
        r.group.rank()
    );
    let _ = writeln!(out, "- search space: {}\n", r.search_space);
    out.push_str("### Constraints\n\n");
    bullet_list(&mut out, &r.constraints_applied);
    out.push_str("\n### Certificates\n\n");
    bullet_list(&mut out, &r.certificates);
    if !r.facts.is_empty() {
        out.push_str("\n### Computed values\n\n");
        let facts: Vec<String> = r.facts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
        bullet_list(&mut out, &facts);
    }
    out.push_str("\n### Survivors\n\n");
    bullet_list(&mut out, &r.survivors.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    out.push_str("\n### Expected\n\n");
    bullet_list(
        &mut out,
        &r.expected_survivors.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
    );
    out.push_str("\n### Axioms used\n\n");
    bullet_list(&mut out, &r.axioms_used.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    if !r.discrepancies.is_empty() {
        out.push_str("\n### Discrepancies\n\n");
        bullet_list(&mut out, &r.discrepancies.iter().map(|d| d.to_string()).collect::<Vec<_>>());
    }
    out
}

pub fn theorem_markdown(t: &TheoremReport) -> String {
    let mut out = format!("# Case verification ({})\n\n", t.mode);
    for r in &t.reports {
        out.push_str(&case_markdown(r));
        out.push('\n');
    }
    let _ = writeln!(out, "## Theorem ({})\n", t.status().as_str());
    let families: Vec<String> = t
        .surviving_families
        .iter()
        .map(|(id, s)| format!("{id}: {s}"))
        .collect();
    out.push_str("Surviving families:\n\n");
    bullet_list(&mut out, &families);
    out.push_str("\nAxioms used:\n\n");
    bullet_list(&mut out, &t.axioms_used.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    out
}

pub fn axioms_json(ledger: &[Axiom]) -> Value {
    serde_json::to_value(ledger).expect("axioms serialize")
}

pub fn axioms_markdown(ledger: &[Axiom]) -> String {
    let mut out = String::from("| id | statement | citation |\n|---|---|---|\n");
    for a in ledger {
        let _ = writeln!(out, "| {} | {} | {} |", a.id, a.statement, a.citation);
    }
    out
}

/// Committed survivor sets, one per case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Baseline {
    pub cases: BTreeMap<CaseId, Vec<Survivor>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BaselineDiff {
    pub missing: Vec<Survivor>,
    pub unexpected: Vec<Survivor>,
}

impl BaselineDiff {
    pub fn is_empty(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

impl Baseline {
    pub fn builtin() -> Self {
        Self::from_json(BUILTIN_BASELINE).expect("committed baseline parses")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let b: Baseline =
            serde_json::from_str(text).map_err(|e| Error::Baseline(e.to_string()))?;
        if let Some(id) = CaseId::ALL.iter().find(|id| !b.cases.contains_key(id)) {
            return Err(Error::Baseline(format!("no entry for {id}")));
        }
        Ok(b)
    }

    pub fn from_expectations() -> Self {
        Self {
            cases: CaseId::ALL
                .iter()
                .map(|&id| (id, id.expected_survivors()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        canonical(&serde_json::to_value(self).expect("baseline serializes"))
    }

    pub fn expected(&self, id: CaseId) -> &[Survivor] {
        &self.cases[&id]
    }

    /// Structural comparison: survivor sets, ignoring order.
    pub fn diff(&self, report: &CaseReport) -> BaselineDiff {
        let want: BTreeSet<&Survivor> = self.expected(report.case_id).iter().collect();
        let got: BTreeSet<&Survivor> = report.survivors.iter().collect();
        BaselineDiff {
            missing: want.difference(&got).map(|s| (*s).clone()).collect(),
            unexpected: got.difference(&want).map(|s| (*s).clone()).collect(),
        }
    }

    /// Replaces each report's expectation with the baseline entry.
    pub fn apply(&self, reports: &mut [CaseReport]) {
        for r in reports {
            let mut expected = self.expected(r.case_id).to_vec();
            expected.sort();
            r.expected_survivors = expected;
        }
    }
}
