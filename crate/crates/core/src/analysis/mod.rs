//! Central-automorphism order formulas, the condition verdict
//! `Z(Inn(G)) = Autcent_Z(G) < Autcent(G)`, theorem and lemma checks, and
//! per-group reports.

mod audit;
mod checks;
mod formulas;
mod invariants;
mod report;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use audit::{
    audit, verify, AuditSummary, StatementTally, VerifyRow, VerifyStatus, VerifySummary,
};
pub use checks::{
    classify_theorems, condition_check, structural_lemma_checks, ConditionVerdict, CountSource,
    LemmaEntry, LemmaRecord, TheoremRecord, TheoremStatement,
};
pub use formulas::{cent_order_formula, centz_order_formula, z_inn_order, CentFormula};
pub use invariants::GroupInvariants;
pub use report::{
    analyze, analyze_all, AnalysisOptions, AnalysisReport, OracleColumns, OracleOutcome,
};

use crate::group::GroupError;
use crate::hom::HomError;
use crate::oracle::OracleError;

/// Three-valued verdict; `Unknown` is never coerced to true or false.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Unknown,
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }
}

impl std::ops::Not for Verdict {
    type Output = Verdict;

    fn not(self) -> Verdict {
        match self {
            Verdict::True => Verdict::False,
            Verdict::False => Verdict::True,
            Verdict::Unknown => Verdict::Unknown,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("the formula requires a non-abelian group")]
    Abelian,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
