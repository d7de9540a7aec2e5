use std::fmt;

use serde::Serialize;

use super::{GroupInvariants, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountSource {
    Oracle,
    Formula,
    None,
}

impl fmt::Display for CountSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountSource::Oracle => "oracle",
            CountSource::Formula => "formula",
            CountSource::None => "none",
        })
    }
}

/// Verdict on `Z(Inn(G)) = Autcent_Z(G) < Autcent(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict {
    /// False for abelian groups, whose verdict is always false.
    pub applicable: bool,
    /// `|Z(Inn(G))| = |Autcent_Z(G)|`. `Z(Inn(G))` embeds in `Autcent_Z(G)`,
    /// so equal orders mean equal groups.
    pub equality: Verdict,
    /// `|Autcent_Z(G)| < |Autcent(G)|`.
    pub strictness: Verdict,
    pub holds: Verdict,
    pub autcent: Option<u128>,
    pub autcent_source: CountSource,
}

/// Decides the condition from `|Z(Inn)|`, `|Autcent_Z|` and whichever
/// `|Autcent|` is available: the oracle count, else the formula value when
/// purity is established, else none (strictness unknown).
pub fn condition_check(
    inv: &GroupInvariants,
    autcentz: u128,
    autcent_oracle: Option<u128>,
    autcent_formula: Option<(u128, bool)>,
) -> ConditionVerdict {
    if inv.abelian {
        return ConditionVerdict {
            applicable: false,
            equality: Verdict::False,
            strictness: Verdict::False,
            holds: Verdict::False,
            autcent: None,
            autcent_source: CountSource::None,
        };
    }
    let equality = Verdict::from_bool(inv.z_inn() as u128 == autcentz);
    let (autcent, autcent_source) = match (autcent_oracle, autcent_formula) {
        (Some(n), _) => (Some(n), CountSource::Oracle),
        (None, Some((n, true))) => (Some(n), CountSource::Formula),
        _ => (None, CountSource::None),
    };
    let strictness = autcent.map_or(Verdict::Unknown, |n| Verdict::from_bool(autcentz < n));
    ConditionVerdict {
        applicable: true,
        equality,
        strictness,
        holds: equality.and(strictness),
        autcent,
        autcent_source,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremStatement {
    /// No group of order at most `p^6` satisfies the condition.
    SmallOrder,
    /// A group of order `p^7` satisfies it iff `Z(G) = C_{p^2}`,
    /// `|G'| = p^4` and the class is 4.
    OrderP7,
}

impl TheoremStatement {
    pub const ALL: [TheoremStatement; 2] =
        [TheoremStatement::SmallOrder, TheoremStatement::OrderP7];

    pub fn key(self) -> &'static str {
        match self {
            TheoremStatement::SmallOrder => "order-at-most-p6",
            TheoremStatement::OrderP7 => "order-p7",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremRecord {
    /// `None` when no theorem speaks about this group.
    pub statement: Option<TheoremStatement>,
    pub expected: Option<bool>,
    pub computed: Verdict,
}

impl TheoremRecord {
    /// A decided verdict contradicting the expectation.
    pub fn violation(&self) -> bool {
        matches!((self.expected, self.computed.as_bool()), (Some(e), Some(c)) if e != c)
    }

    pub fn status(&self) -> &'static str {
        match (self.expected, self.computed.as_bool()) {
            (None, _) => "no-expectation",
            (Some(_), None) => "unknown",
            (Some(e), Some(c)) if e == c => "consistent",
            _ => "VIOLATION",
        }
    }
}

/// Compares the computed condition verdict with what the theorems predict.
/// Abelian groups are outside the theorems.
pub fn classify_theorems(inv: &GroupInvariants, condition: &ConditionVerdict) -> TheoremRecord {
    let (statement, expected) = if !condition.applicable {
        (None, None)
    } else if inv.log_order <= 6 {
        (Some(TheoremStatement::SmallOrder), Some(false))
    } else if inv.log_order == 7 {
        let expected = inv.center_type.exponents() == [2]
            && inv.derived_order == inv.p_power(4)
            && inv.class == 4;
        (Some(TheoremStatement::OrderP7), Some(expected))
    } else {
        (None, None)
    };
    TheoremRecord {
        statement,
        expected,
        computed: condition.holds,
    }
}

/// One "hypothesis implies conclusion" statement (or "iff" when
/// `equivalence` is set) evaluated on a single group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaEntry {
    pub key: &'static str,
    pub hypothesis: Verdict,
    pub conclusion: Verdict,
    pub equivalence: bool,
}

impl LemmaEntry {
    pub fn counterexample(&self) -> bool {
        match (self.hypothesis, self.conclusion) {
            (Verdict::True, Verdict::False) => true,
            (Verdict::False, Verdict::True) => self.equivalence,
            _ => false,
        }
    }

    pub fn status(&self) -> &'static str {
        if self.counterexample() {
            return "COUNTEREXAMPLE";
        }
        match (self.hypothesis, self.conclusion) {
            (Verdict::Unknown, _) => "unknown",
            (Verdict::True, Verdict::Unknown) => "unknown",
            (Verdict::False, Verdict::Unknown) if self.equivalence => "unknown",
            (Verdict::False, _) => "vacuous",
            _ => "pass",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LemmaRecord {
    pub entries: Vec<LemmaEntry>,
}

impl LemmaRecord {
    pub const KEYS: [&'static str; 4] = [
        "derived-abelian",
        "coclass-two",
        "attar",
        "running-assumptions",
    ];

    pub fn counterexamples(&self) -> usize {
        self.entries.iter().filter(|e| e.counterexample()).count()
    }

    pub fn get(&self, key: &str) -> Option<&LemmaEntry> {
        self.entries.iter().find(|e| e.key == key)
    }
}

/// Evaluates the structural statements on one non-abelian group:
///
/// * `derived-abelian`: `G'` abelian implies `G/G'Z(G)` is not cyclic;
/// * `coclass-two`: coclass 2 implies the condition fails;
/// * `attar`: `Autcent_Z(G) = Inn(G)` iff `G' = Z(G)` is cyclic (the left
///   side needs the oracle's map sets);
/// * `running-assumptions`: `Z(G)` not inside `G'` and class at least 3
///   imply not maximal class, `|Z(G)| >= p^2` and `|G| >= p^5`.
pub fn structural_lemma_checks(
    inv: &GroupInvariants,
    condition: &ConditionVerdict,
    autcentz_equals_inn: Option<bool>,
) -> LemmaRecord {
    if inv.abelian {
        return LemmaRecord::default();
    }
    let p2 = inv.p_power(2);
    let entries = vec![
        LemmaEntry {
            key: "derived-abelian",
            hypothesis: Verdict::from_bool(inv.derived_abelian),
            conclusion: Verdict::from_bool(!inv.derived_center_quotient.is_cyclic()),
            equivalence: false,
        },
        LemmaEntry {
            key: "coclass-two",
            hypothesis: Verdict::from_bool(inv.coclass == 2),
            conclusion: !condition.holds,
            equivalence: false,
        },
        LemmaEntry {
            key: "attar",
            hypothesis: autcentz_equals_inn.map_or(Verdict::Unknown, Verdict::from_bool),
            conclusion: Verdict::from_bool(
                inv.derived_equals_center && inv.center_type.is_cyclic(),
            ),
            equivalence: true,
        },
        LemmaEntry {
            key: "running-assumptions",
            hypothesis: Verdict::from_bool(!inv.center_in_derived && inv.class >= 3),
            conclusion: Verdict::from_bool(
                inv.coclass != 1 && inv.center_order() >= p2 && inv.log_order >= 5,
            ),
            equivalence: false,
        },
    ];
    LemmaRecord { entries }
}
