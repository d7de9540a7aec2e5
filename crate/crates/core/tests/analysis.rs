mod common;

use std::sync::{Arc, OnceLock};

use centaut::analysis::{
    analyze, analyze_all, audit, centz_order_formula, classify_theorems, condition_check,
    structural_lemma_checks, verify, AnalysisOptions, AnalysisReport, CountSource, GroupInvariants,
    TheoremStatement, Verdict, VerifyStatus,
};
use centaut::exec::Exec;
use centaut::group::{center, FiniteGroupView};
use centaut::oracle::OracleConfig;
use common::{abelian_view, all_views, non_abelian_views, view};

fn with_oracle(exec: Exec) -> AnalysisOptions {
    AnalysisOptions {
        oracle: true,
        config: OracleConfig {
            exec,
            ..OracleConfig::default()
        },
    }
}

fn corpus_reports() -> &'static [AnalysisReport] {
    static REPORTS: OnceLock<Vec<AnalysisReport>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        analyze_all(&all_views(), &with_oracle(Exec::default()))
            .into_iter()
            .map(Result::unwrap)
            .collect()
    })
}

fn field<'a>(r: &'a [(&str, String)], key: &str) -> &'a str {
    &r.iter().find(|(k, _)| *k == key).unwrap().1
}

/// `|Z(Inn(G))|` by definition: elements whose commutators with all of `G`
/// are central, modulo the center.
fn z_inn_bruteforce(g: &Arc<FiniteGroupView>) -> usize {
    let z = center(g);
    let n = g.order();
    let second = (0..n)
        .filter(|&x| (0..n).all(|y| z.contains(g.commutator(x, y))))
        .count();
    second / z.order()
}

#[test]
fn paper_group_report() {
    let r = analyze(&view("paper-3^7"), &with_oracle(Exec::default())).unwrap();
    let inv = &r.invariants;
    assert_eq!(inv.order, 2187);
    assert_eq!(inv.center_type.exponents(), [2]);
    assert_eq!(inv.derived_order, 81);
    assert_eq!(inv.class, 4);
    assert_eq!(inv.derived_center_quotient.exponents(), [1, 1]);
    assert_eq!(inv.abelianization.exponents(), [2, 1]);
    assert_eq!(r.z_inn, 9);
    assert_eq!(r.centz_formula, Some(9));
    assert_eq!(r.cent_formula.map(|c| (c.value, c.valid)), Some((27, true)));
    let c = r.oracle.columns().unwrap();
    assert_eq!((c.autcentz, c.autcent), (9, 27));
    assert_eq!(r.condition.equality, Verdict::True);
    assert_eq!(r.condition.strictness, Verdict::True);
    assert_eq!(r.condition.holds, Verdict::True);
    assert_eq!(r.condition.autcent_source, CountSource::Oracle);
    assert_eq!(r.theorem.statement, Some(TheoremStatement::OrderP7));
    assert_eq!(r.theorem.expected, Some(true));
    assert_eq!(r.theorem.status(), "consistent");
    assert_eq!(r.lemmas.counterexamples(), 0);
}

#[test]
fn paper_group_without_oracle_uses_formula() {
    let r = analyze(&view("paper-3^7"), &AnalysisOptions::default()).unwrap();
    assert_eq!(r.condition.autcent_source, CountSource::Formula);
    assert_eq!(r.condition.holds, Verdict::True);
    assert_eq!(r.lemmas.get("attar").unwrap().status(), "unknown");
    assert_eq!(field(&r.fields(), "oracle"), "not-run");
    assert_eq!(field(&r.fields(), "oracle_autcent"), "-");
}

#[test]
fn class_three_mutant_fails_and_matches_expectation() {
    let r = analyze(&view("mutant-class3-3^7"), &with_oracle(Exec::default())).unwrap();
    assert_eq!(r.invariants.class, 3);
    assert_eq!(r.theorem.expected, Some(false));
    assert_eq!(r.condition.holds, Verdict::False);
    assert!(!r.theorem.violation());
}

#[test]
fn formulas_match_oracle_on_corpus() {
    for r in corpus_reports() {
        if r.invariants.abelian {
            continue;
        }
        let c = r.oracle.columns().unwrap();
        assert_eq!(r.centz_formula, Some(c.autcentz as u128), "{}", r.name());
        let cent = r.cent_formula.unwrap();
        if cent.valid {
            assert_eq!(cent.value, c.autcent as u128, "{}", r.name());
        } else {
            // with an abelian factor some central endomorphisms are not bijective
            assert!(cent.value > c.autcent as u128, "{}", r.name());
        }
    }
}

#[test]
fn z_inn_matches_definition() {
    for g in non_abelian_views() {
        let inv = GroupInvariants::compute(&g).unwrap();
        assert_eq!(inv.z_inn(), z_inn_bruteforce(&g), "{}", g.name());
    }
}

#[test]
fn centz_formula_examples() {
    let inv = GroupInvariants::compute(&view("extraspecial-27-exp3")).unwrap();
    assert_eq!(centz_order_formula(&inv).unwrap(), 9);
    let inv = GroupInvariants::compute(&view("dihedral-16")).unwrap();
    assert_eq!(centz_order_formula(&inv).unwrap(), 4);
    let inv = GroupInvariants::compute(&view("c9")).unwrap();
    assert!(centz_order_formula(&inv).is_err());
}

#[test]
fn condition_sources_and_unknowns() {
    let inv = GroupInvariants::compute(&view("paper-3^7")).unwrap();
    let none = condition_check(&inv, 9, None, None);
    assert_eq!(none.strictness, Verdict::Unknown);
    assert_eq!(none.holds, Verdict::Unknown);
    assert_eq!(none.autcent_source, CountSource::None);
    let invalid = condition_check(&inv, 9, None, Some((27, false)));
    assert_eq!(invalid.holds, Verdict::Unknown);
    let oracle = condition_check(&inv, 9, Some(9), Some((27, true)));
    assert_eq!(oracle.autcent_source, CountSource::Oracle);
    assert_eq!(oracle.strictness, Verdict::False);
    let unequal = condition_check(&inv, 27, None, None);
    assert_eq!(unequal.holds, Verdict::False);

    let record = classify_theorems(&inv, &none);
    assert_eq!(record.status(), "unknown");
    assert!(!record.violation());
}

#[test]
fn theorem_expectations() {
    for r in corpus_reports() {
        let inv = &r.invariants;
        if inv.abelian {
            assert_eq!(r.theorem.statement, None);
            continue;
        }
        match inv.log_order {
            0..=6 => assert_eq!(r.theorem.expected, Some(false), "{}", r.name()),
            7 => assert_eq!(r.theorem.statement, Some(TheoremStatement::OrderP7)),
            _ => assert_eq!(r.theorem.statement, None),
        }
        assert!(!r.theorem.violation(), "{}", r.name());
    }
}

#[test]
fn injected_verdict_is_reported_as_violation() {
    let mut r = analyze(&view("extraspecial-27-exp3"), &AnalysisOptions::default()).unwrap();
    r.theorem.computed = Verdict::True;
    assert_eq!(r.theorem.status(), "VIOLATION");
    let summary = audit(&[r], Vec::new());
    assert_eq!(summary.violations.len(), 1);
    assert!(summary.violations[0].contains("THEOREM VIOLATION"));
    assert!(!summary.passed());
}

#[test]
fn lemmas_hold_on_corpus() {
    for r in corpus_reports() {
        assert_eq!(r.lemmas.counterexamples(), 0, "{}", r.name());
    }
    let r = analyze(&view("extraspecial-27-exp9"), &with_oracle(Exec::default())).unwrap();
    assert_eq!(r.lemmas.get("attar").unwrap().status(), "pass");
    let r = analyze(&view("coclass2-243-a"), &with_oracle(Exec::default())).unwrap();
    assert_eq!(r.lemmas.get("coclass-two").unwrap().status(), "pass");
}

#[test]
fn lemma_checks_flag_a_forged_counterexample() {
    let inv = GroupInvariants::compute(&view("coclass2-243-b")).unwrap();
    let forged = condition_check(&inv, inv.z_inn() as u128, Some(u128::MAX), None);
    assert_eq!(forged.holds, Verdict::True);
    let lemmas = structural_lemma_checks(&inv, &forged, Some(true));
    assert_eq!(
        lemmas.get("coclass-two").unwrap().status(),
        "COUNTEREXAMPLE"
    );
    // G' != Z(G) here, so Autcent_Z = Inn would contradict the equivalence
    assert_eq!(lemmas.get("attar").unwrap().status(), "COUNTEREXAMPLE");
}

#[test]
fn report_keys_are_stable() {
    let r = analyze(&view("paper-3^7"), &AnalysisOptions::default()).unwrap();
    let keys: Vec<&str> = r.fields().iter().map(|(k, _)| *k).collect();
    assert_eq!(
        keys,
        [
            "name",
            "order",
            "prime",
            "abelian",
            "class",
            "coclass",
            "d",
            "center_type",
            "center_generators",
            "derived_order",
            "derived_generators",
            "center_meet_derived",
            "derived_center_order",
            "quotient_type",
            "abelianization_type",
            "z_inn_order",
            "centz_formula",
            "cent_formula",
            "cent_formula_valid",
            "purity",
            "oracle",
            "oracle_endomorphisms",
            "oracle_autcentz",
            "oracle_autcent",
            "oracle_closed",
            "inner_center_embeds",
            "condition_equality",
            "condition_strictness",
            "strictness_source",
            "condition",
            "theorem",
            "theorem_expected",
            "theorem_status",
            "lemma_derived_abelian",
            "lemma_coclass_two",
            "lemma_attar",
            "lemma_running_assumptions",
        ]
    );
    let json: serde_json::Map<String, serde_json::Value> =
        serde_json::from_str(&r.to_json_line()).unwrap();
    assert_eq!(json.len(), keys.len());
    assert!(json.values().all(|v| v.is_string()));
    assert_eq!(json["center_type"], "[2]");
    assert_eq!(json["quotient_type"], "[1,1]");
}

#[test]
fn abelian_short_form() {
    let r = analyze(&abelian_view(3, &[2, 1]), &with_oracle(Exec::default())).unwrap();
    let keys: Vec<&str> = r.fields().iter().map(|(k, _)| *k).collect();
    assert_eq!(
        keys,
        [
            "name",
            "order",
            "prime",
            "abelian",
            "type",
            "condition",
            "condition_applicable"
        ]
    );
    assert_eq!(field(&r.fields(), "type"), "[2,1]");
    assert_eq!(r.condition.holds, Verdict::False);
    assert!(!r.condition.applicable);
    assert!(r.oracle.columns().is_none());
}

#[test]
fn exec_policies_give_identical_reports() {
    let groups = all_views();
    let lines = |exec| -> Vec<String> {
        analyze_all(&groups, &with_oracle(exec))
            .into_iter()
            .map(|r| r.unwrap().to_json_line())
            .collect()
    };
    assert_eq!(lines(Exec::Sequential), lines(Exec::Parallel));
}

#[test]
fn inclusion_chain_and_audit() {
    let reports = corpus_reports();
    assert!(reports.iter().all(|r| r.inclusion_chain_holds()));
    let summary = audit(reports, Vec::new());
    assert!(summary.passed(), "{summary}");
    assert_eq!(summary.groups, 15);
    assert_eq!(summary.abelian, 3);
    let small = summary.theorems["order-at-most-p6"];
    assert_eq!(small.pass, 10);
    assert_eq!(summary.theorems["order-p7"].pass, 2);
    assert_eq!(summary.lemmas["attar"].unknown, 0);
    assert!(summary
        .to_json_lines()
        .lines()
        .last()
        .unwrap()
        .contains("\"violations\":\"0\""));
}

#[test]
fn verify_rows() {
    let summary = verify(corpus_reports());
    assert_eq!(summary.mismatches(), 0, "{summary}");
    assert_eq!(summary.skipped(), 3);
    let paper = summary.rows.iter().find(|r| r.name == "paper-3^7").unwrap();
    assert_eq!(paper.status, VerifyStatus::Ok);
    assert_eq!(
        (paper.centz_formula, paper.centz_oracle),
        (Some(9), Some(9))
    );
    assert_eq!(
        (paper.cent_formula, paper.cent_oracle),
        (Some(27), Some(27))
    );
    let factor = summary
        .rows
        .iter()
        .find(|r| r.name == "c2-x-dihedral-8")
        .unwrap();
    assert_eq!(factor.cent_oracle, None);
}

#[test]
fn skipped_oracle_is_reported() {
    let options = AnalysisOptions {
        oracle: true,
        config: OracleConfig {
            hom_budget: 1,
            ..OracleConfig::default()
        },
    };
    let r = analyze(&view("paper-3^7"), &options).unwrap();
    assert_eq!(field(&r.fields(), "oracle"), "skipped");
    assert_eq!(r.condition.autcent_source, CountSource::Formula);
    let row = &verify(&[r]).rows[0];
    assert!(matches!(row.status, VerifyStatus::Skipped(_)));
}
