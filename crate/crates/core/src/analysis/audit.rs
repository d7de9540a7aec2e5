use std::collections::BTreeMap;
use std::fmt;

use super::report::json_object;
use super::{AnalysisReport, LemmaRecord, OracleOutcome, TheoremStatement};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StatementTally {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
    /// Hypothesis false, or no expectation.
    pub vacuous: usize,
}

impl StatementTally {
    fn record(&mut self, status: &str) {
        match status {
            "pass" | "consistent" => self.pass += 1,
            "unknown" => self.unknown += 1,
            "vacuous" | "no-expectation" => self.vacuous += 1,
            _ => self.fail += 1,
        }
    }
}

/// Corpus-wide theorem and lemma tallies.
#[derive(Clone, Debug, Default)]
pub struct AuditSummary {
    pub groups: usize,
    pub abelian: usize,
    pub theorems: BTreeMap<&'static str, StatementTally>,
    pub lemmas: BTreeMap<&'static str, StatementTally>,
    /// Groups whose verdict contradicts a theorem or a lemma.
    pub violations: Vec<String>,
    /// Inputs that could not be analysed, as `(name, reason)`.
    pub errors: Vec<(String, String)>,
}

/// Tallies theorem and lemma outcomes over a set of reports.
pub fn audit(reports: &[AnalysisReport], errors: Vec<(String, String)>) -> AuditSummary {
    let mut s = AuditSummary {
        groups: reports.len(),
        errors,
        ..Default::default()
    };
    for key in TheoremStatement::ALL.map(|t| t.key()) {
        s.theorems.insert(key, StatementTally::default());
    }
    for key in LemmaRecord::KEYS {
        s.lemmas.insert(key, StatementTally::default());
    }
    for r in reports {
        if r.invariants.abelian {
            s.abelian += 1;
            continue;
        }
        if let Some(statement) = r.theorem.statement {
            s.theorems
                .get_mut(statement.key())
                .unwrap()
                .record(r.theorem.status());
        }
        if r.theorem.violation() {
            s.violations.push(format!(
                "{}: THEOREM VIOLATION ({}): expected {}, computed {}",
                r.name(),
                r.theorem.statement.map_or("-", |t| t.key()),
                r.theorem.expected.unwrap_or_default(),
                r.theorem.computed
            ));
        }
        for e in &r.lemmas.entries {
            s.lemmas.get_mut(e.key).unwrap().record(e.status());
            if e.counterexample() {
                s.violations.push(format!(
                    "{}: lemma counterexample ({}): hypothesis {}, conclusion {}",
                    r.name(),
                    e.key,
                    e.hypothesis,
                    e.conclusion
                ));
            }
        }
    }
    s
}

impl AuditSummary {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.errors.is_empty()
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for (kind, map) in [("theorem", &self.theorems), ("lemma", &self.lemmas)] {
            for (key, t) in map {
                out.push_str(&json_object(&[
                    ("statement", format!("{kind}:{key}")),
                    ("pass", t.pass.to_string()),
                    ("fail", t.fail.to_string()),
                    ("unknown", t.unknown.to_string()),
                    ("vacuous", t.vacuous.to_string()),
                ]));
                out.push('\n');
            }
        }
        for v in &self.violations {
            out.push_str(&json_object(&[("violation", v.clone())]));
            out.push('\n');
        }
        for (name, reason) in &self.errors {
            out.push_str(&json_object(&[
                ("error", name.clone()),
                ("reason", reason.clone()),
            ]));
            out.push('\n');
        }
        out.push_str(&json_object(&[
            ("groups", self.groups.to_string()),
            ("abelian", self.abelian.to_string()),
            ("violations", self.violations.len().to_string()),
            ("errors", self.errors.len().to_string()),
        ]));
        out.push('\n');
        out
    }
}

impl fmt::Display for AuditSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<30} {:>5} {:>5} {:>7} {:>7}",
            "statement", "pass", "fail", "unknown", "vacuous"
        )?;
        for (kind, map) in [("theorem", &self.theorems), ("lemma", &self.lemmas)] {
            for (key, t) in map {
                writeln!(
                    f,
                    "{:<30} {:>5} {:>5} {:>7} {:>7}",
                    format!("{kind}:{key}"),
                    t.pass,
                    t.fail,
                    t.unknown,
                    t.vacuous
                )?;
            }
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for (name, reason) in &self.errors {
            writeln!(f, "error: {name}: {reason}")?;
        }
        writeln!(
            f,
            "{} groups ({} abelian), {} violations, {} errors",
            self.groups,
            self.abelian,
            self.violations.len(),
            self.errors.len()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VerifyStatus {
    Ok,
    Mismatch(String),
    Skipped(String),
}

/// Formula against oracle for one group.
#[derive(Clone, Debug)]
pub struct VerifyRow {
    pub name: String,
    pub centz_formula: Option<u128>,
    pub centz_oracle: Option<usize>,
    pub cent_formula: Option<u128>,
    /// Only compared when the group is purely non-abelian.
    pub cent_oracle: Option<usize>,
    pub purely_non_abelian: bool,
    pub status: VerifyStatus,
}

#[derive(Clone, Debug, Default)]
pub struct VerifySummary {
    pub rows: Vec<VerifyRow>,
}

fn verify_row(r: &AnalysisReport) -> VerifyRow {
    let mut row = VerifyRow {
        name: r.name().to_string(),
        centz_formula: r.centz_formula,
        centz_oracle: None,
        cent_formula: r.cent_formula.map(|c| c.value),
        cent_oracle: None,
        purely_non_abelian: r.purity.as_ref().is_some_and(|p| p.is_purely_non_abelian()),
        status: VerifyStatus::Ok,
    };
    if r.invariants.abelian {
        row.status = VerifyStatus::Skipped("abelian".into());
        return row;
    }
    let c = match &r.oracle {
        OracleOutcome::Computed(c) => c,
        OracleOutcome::Skipped(reason) => {
            row.status = VerifyStatus::Skipped(reason.clone());
            return row;
        }
        OracleOutcome::NotRun => {
            row.status = VerifyStatus::Skipped("oracle not run".into());
            return row;
        }
    };
    row.centz_oracle = Some(c.autcentz);
    let mut problems = Vec::new();
    if r.centz_formula != Some(c.autcentz as u128) {
        problems.push("autcentz".to_string());
    }
    if row.purely_non_abelian {
        row.cent_oracle = Some(c.autcent);
        if row.cent_formula != Some(c.autcent as u128) {
            problems.push("autcent".to_string());
        }
    }
    if !c.closed {
        problems.push("not closed".to_string());
    }
    if !c.inner_center.holds() {
        problems.push("inner center".to_string());
    }
    if !problems.is_empty() {
        row.status = VerifyStatus::Mismatch(problems.join(", "));
    }
    row
}

/// Compares formula values with oracle counts.
pub fn verify(reports: &[AnalysisReport]) -> VerifySummary {
    VerifySummary {
        rows: reports.iter().map(verify_row).collect(),
    }
}

impl VerifySummary {
    pub fn mismatches(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, VerifyStatus::Mismatch(_)))
            .count()
    }

    pub fn skipped(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, VerifyStatus::Skipped(_)))
            .count()
    }

    fn cells(row: &VerifyRow) -> Vec<(&'static str, String)> {
        let o = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        let status = match &row.status {
            VerifyStatus::Ok => "ok".to_string(),
            VerifyStatus::Mismatch(m) => format!("MISMATCH ({m})"),
            VerifyStatus::Skipped(s) => format!("skipped ({s})"),
        };
        vec![
            ("name", row.name.clone()),
            ("centz_formula", o(row.centz_formula.map(|x| x.to_string()))),
            ("centz_oracle", o(row.centz_oracle.map(|x| x.to_string()))),
            ("cent_formula", o(row.cent_formula.map(|x| x.to_string()))),
            ("cent_oracle", o(row.cent_oracle.map(|x| x.to_string()))),
            ("status", status),
        ]
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&json_object(&Self::cells(row)));
            out.push('\n');
        }
        out.push_str(&json_object(&[
            ("groups", self.rows.len().to_string()),
            ("mismatches", self.mismatches().to_string()),
            ("skipped", self.skipped().to_string()),
        ]));
        out.push('\n');
        out
    }
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .map(|r| r.name.len())
            .max()
            .unwrap_or(4)
            .max(4);
        writeln!(
            f,
            "{:<width$}  {:>13} {:>12} {:>12} {:>11}  status",
            "name", "centz_formula", "centz_oracle", "cent_formula", "cent_oracle"
        )?;
        for row in &self.rows {
            let c = Self::cells(row);
            writeln!(
                f,
                "{:<width$}  {:>13} {:>12} {:>12} {:>11}  {}",
                c[0].1, c[1].1, c[2].1, c[3].1, c[4].1, c[5].1
            )?;
        }
        writeln!(
            f,
            "{} groups, {} mismatches, {} skipped",
            self.rows.len(),
            self.mismatches(),
            self.skipped()
        )
    }
}
