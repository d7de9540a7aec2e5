use std::fmt::Write as _;
use std::sync::Arc;

use super::{
    cent_order_formula, centz_order_formula, classify_theorems, condition_check,
    structural_lemma_checks, z_inn_order, AnalysisError, CentFormula, ConditionVerdict,
    GroupInvariants, LemmaRecord, TheoremRecord,
};
use crate::group::FiniteGroupView;
use crate::oracle::{
    central_automorphisms, direct_factor_search, inner_automorphisms, inner_center_check,
    InnerCenterCheck, OracleConfig, OracleError, PurityVerdict,
};

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    /// Run the brute-force oracle.
    pub oracle: bool,
    pub config: OracleConfig,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleColumns {
    pub endomorphisms: usize,
    pub autcent: usize,
    pub autcentz: usize,
    /// Both automorphism sets are closed under composition and inverses.
    pub closed: bool,
    pub inner_center: InnerCenterCheck,
    /// `Autcent_Z(G) = Inn(G)` as sets of maps.
    pub autcentz_equals_inn: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    NotRun,
    Skipped(String),
    Computed(OracleColumns),
}

impl OracleOutcome {
    pub fn columns(&self) -> Option<&OracleColumns> {
        match self {
            OracleOutcome::Computed(c) => Some(c),
            _ => None,
        }
    }
}

/// Everything computed for one group.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub invariants: GroupInvariants,
    pub z_inn: usize,
    pub centz_formula: Option<u128>,
    pub cent_formula: Option<CentFormula>,
    pub purity: Option<PurityVerdict>,
    pub oracle: OracleOutcome,
    pub condition: ConditionVerdict,
    pub theorem: TheoremRecord,
    pub lemmas: LemmaRecord,
}

fn run_oracle(
    g: &Arc<FiniteGroupView>,
    config: &OracleConfig,
) -> Result<OracleOutcome, AnalysisError> {
    let (endomorphisms, autcent, autcentz) = match central_automorphisms(g, config) {
        Ok(x) => x,
        Err(OracleError::BudgetExceeded { required, budget }) => {
            return Ok(OracleOutcome::Skipped(format!(
                "{required} candidate maps exceed the budget of {budget}"
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let inner_center = inner_center_check(g, &autcentz)?;
    let autcentz_equals_inn = autcentz.tables() == inner_automorphisms(g);
    Ok(OracleOutcome::Computed(OracleColumns {
        endomorphisms,
        autcent: autcent.count(),
        autcentz: autcentz.count(),
        closed: autcent.closed && autcentz.closed,
        inner_center,
        autcentz_equals_inn,
    }))
}

/// Analyses one group.
pub fn analyze(
    g: &Arc<FiniteGroupView>,
    options: &AnalysisOptions,
) -> Result<AnalysisReport, AnalysisError> {
    let invariants = GroupInvariants::compute(g)?;
    let z_inn = z_inn_order(&invariants);
    if invariants.abelian {
        let condition = condition_check(&invariants, 1, None, None);
        let theorem = classify_theorems(&invariants, &condition);
        return Ok(AnalysisReport {
            invariants,
            z_inn,
            centz_formula: None,
            cent_formula: None,
            purity: None,
            oracle: OracleOutcome::NotRun,
            condition,
            theorem,
            lemmas: LemmaRecord::default(),
        });
    }

    let purity = direct_factor_search(g, options.config.subgroup_budget);
    let centz = centz_order_formula(&invariants)?;
    let cent = cent_order_formula(&invariants, &purity)?;
    let oracle = if options.oracle {
        run_oracle(g, &options.config)?
    } else {
        OracleOutcome::NotRun
    };
    let columns = oracle.columns();
    let condition = condition_check(
        &invariants,
        centz,
        columns.map(|c| c.autcent as u128),
        Some((cent.value, cent.valid)),
    );
    let theorem = classify_theorems(&invariants, &condition);
    let lemmas = structural_lemma_checks(
        &invariants,
        &condition,
        columns.map(|c| c.autcentz_equals_inn),
    );
    Ok(AnalysisReport {
        invariants,
        z_inn,
        centz_formula: Some(centz),
        cent_formula: Some(cent),
        purity: Some(purity),
        oracle,
        condition,
        theorem,
        lemmas,
    })
}

/// Analyses several groups, concurrently when the configured policy allows.
/// Results keep the input order.
pub fn analyze_all(
    groups: &[Arc<FiniteGroupView>],
    options: &AnalysisOptions,
) -> Vec<Result<AnalysisReport, AnalysisError>> {
    options
        .config
        .exec
        .map_slice(groups, |g| analyze(g, options))
}

const NONE: &str = "-";

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| NONE.to_string(), |v| v.to_string())
}

impl AnalysisReport {
    pub fn name(&self) -> &str {
        &self.invariants.name
    }

    /// Report fields in their fixed order. Values are plain strings;
    /// integers are decimal and absent values are `-`.
    pub fn fields(&self) -> Vec<(&'static str, String)> {
        let inv = &self.invariants;
        let mut f: Vec<(&'static str, String)> = vec![
            ("name", inv.name.clone()),
            ("order", inv.order.to_string()),
            ("prime", inv.prime.to_string()),
            ("abelian", inv.abelian.to_string()),
        ];
        if inv.abelian {
            f.push(("type", inv.center_type.to_string()));
            f.push(("condition", self.condition.holds.to_string()));
            f.push(("condition_applicable", "false".into()));
            return f;
        }
        let columns = self.oracle.columns();
        let lemma = |key: &str| {
            self.lemmas
                .get(key)
                .map_or(NONE.to_string(), |e| e.status().to_string())
        };
        f.extend([
            ("class", inv.class.to_string()),
            ("coclass", inv.coclass.to_string()),
            ("d", inv.rank.to_string()),
            ("center_type", inv.center_type.to_string()),
            ("center_generators", inv.center_generators.join(",")),
            ("derived_order", inv.derived_order.to_string()),
            ("derived_generators", inv.derived_generators.join(",")),
            ("center_meet_derived", inv.center_meet_derived.to_string()),
            ("derived_center_order", inv.derived_center_order.to_string()),
            ("quotient_type", inv.derived_center_quotient.to_string()),
            ("abelianization_type", inv.abelianization.to_string()),
            ("z_inn_order", self.z_inn.to_string()),
            ("centz_formula", opt(self.centz_formula)),
            ("cent_formula", opt(self.cent_formula.map(|c| c.value))),
            (
                "cent_formula_valid",
                opt(self.cent_formula.map(|c| c.valid)),
            ),
            ("purity", opt(self.purity.as_ref())),
            (
                "oracle",
                match &self.oracle {
                    OracleOutcome::NotRun => "not-run".to_string(),
                    OracleOutcome::Skipped(_) => "skipped".to_string(),
                    OracleOutcome::Computed(_) => "computed".to_string(),
                },
            ),
            (
                "oracle_endomorphisms",
                opt(columns.map(|c| c.endomorphisms)),
            ),
            ("oracle_autcentz", opt(columns.map(|c| c.autcentz))),
            ("oracle_autcent", opt(columns.map(|c| c.autcent))),
            ("oracle_closed", opt(columns.map(|c| c.closed))),
            (
                "inner_center_embeds",
                opt(columns.map(|c| c.inner_center.holds())),
            ),
            ("condition_equality", self.condition.equality.to_string()),
            (
                "condition_strictness",
                self.condition.strictness.to_string(),
            ),
            (
                "strictness_source",
                self.condition.autcent_source.to_string(),
            ),
            ("condition", self.condition.holds.to_string()),
            ("theorem", opt(self.theorem.statement.map(|s| s.key()))),
            ("theorem_expected", opt(self.theorem.expected)),
            ("theorem_status", self.theorem.status().to_string()),
            ("lemma_derived_abelian", lemma("derived-abelian")),
            ("lemma_coclass_two", lemma("coclass-two")),
            ("lemma_attar", lemma("attar")),
            ("lemma_running_assumptions", lemma("running-assumptions")),
        ]);
        f
    }

    /// One JSON object on a single line, keys in [`fields`](Self::fields) order.
    pub fn to_json_line(&self) -> String {
        json_object(&self.fields())
    }

    /// Aligned two-column text.
    pub fn to_table(&self) -> String {
        let fields = self.fields();
        let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in fields {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }

    /// `|Z(Inn)| <= |Autcent_Z| <= |Autcent|` for every count present.
    pub fn inclusion_chain_holds(&self) -> bool {
        let mut chain: Vec<u128> = vec![self.z_inn as u128];
        if let Some(c) = self.oracle.columns() {
            chain.push(c.autcentz as u128);
            chain.push(c.autcent as u128);
        } else if let Some(z) = self.centz_formula {
            chain.push(z);
            if let Some(c) = self.cent_formula.filter(|c| c.valid) {
                chain.push(c.value);
            }
        }
        chain.windows(2).all(|w| w[0] <= w[1])
    }
}

pub(crate) fn json_object(fields: &[(&str, String)]) -> String {
    let mut out = String::from("{");
    for (i, (k, v)) in fields.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&serde_json::to_string(k).expect("string"));
        out.push(':');
        out.push_str(&serde_json::to_string(v).expect("string"));
    }
    out.push('}');
    out
}
