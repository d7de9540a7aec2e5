mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use centaut::group::{
    abelian_invariants, center, coclass, derived_subgroup, frattini_and_rank, lower_central_series,
    minimal_generators, nilpotency_class, subgroup_invariants, upper_central_series,
    FiniteGroupView, GroupError, Subgroup,
};
use common::{abelian_view, all_views, non_abelian_views, presentation, view};
use proptest::prelude::*;

fn id(name: &str, exps: &[u32]) -> usize {
    let p = presentation(name);
    p.element_id(&p.element(exps).unwrap())
}

fn gen(name: &str, i: usize) -> usize {
    let p = presentation(name);
    p.element_id(&p.generator(i))
}

/// Center by testing every element against every element.
fn brute_center(g: &FiniteGroupView) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)))
        .collect()
}

/// Closure of a set under multiplication.
fn brute_closure(g: &FiniteGroupView, seeds: BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seeds;
    set.insert(0);
    loop {
        let next: BTreeSet<usize> = set
            .iter()
            .flat_map(|&a| set.iter().map(move |&b| g.mul(a, b)))
            .collect();
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// `[H, G]` from all commutators of `H` with all of `G`.
fn brute_commutator(g: &FiniteGroupView, h: &BTreeSet<usize>) -> BTreeSet<usize> {
    let seeds = h
        .iter()
        .flat_map(|&a| (0..g.order()).map(move |b| g.commutator(a, b)))
        .collect();
    brute_closure(g, seeds)
}

fn members(s: &Subgroup) -> BTreeSet<usize> {
    s.members().iter().copied().collect()
}

#[test]
fn center_matches_brute_force_on_corpus() {
    for g in all_views() {
        assert_eq!(members(&center(&g)), brute_center(&g), "{}", g.name());
    }
}

#[test]
fn derived_subgroup_matches_brute_force_on_corpus() {
    for g in all_views() {
        if g.order() > 729 {
            continue;
        }
        let all: BTreeSet<usize> = (0..g.order()).collect();
        assert_eq!(
            members(&derived_subgroup(&g)),
            brute_commutator(&g, &all),
            "{}",
            g.name()
        );
    }
}

#[test]
fn lower_central_series_matches_brute_force() {
    for g in all_views() {
        if g.order() > 243 {
            continue;
        }
        let series = lower_central_series(&g).unwrap();
        let mut term: BTreeSet<usize> = (0..g.order()).collect();
        for s in &series {
            assert_eq!(members(s), term, "{}", g.name());
            term = brute_commutator(&g, &term);
        }
        assert_eq!(series.last().unwrap().order(), 1);
    }
}

#[test]
fn paper_center_and_derived() {
    let g = view("paper-3^7");
    let z = center(&g);
    assert_eq!(z.order(), 9);
    assert_eq!(subgroup_invariants(&z).unwrap().exponents(), &[2]);
    assert_eq!(z, Subgroup::generated(&g, &[gen("paper-3^7", 4)]));
    let d = derived_subgroup(&g);
    assert_eq!(d.order(), 81);
    let gens: Vec<usize> = [3, 5, 6, 7].iter().map(|&i| gen("paper-3^7", i)).collect();
    assert_eq!(d, Subgroup::generated(&g, &gens));
    assert!(d.is_abelian());
}

#[test]
fn small_examples() {
    let c9 = view("c9");
    assert!(center(&c9).is_whole());
    assert!(derived_subgroup(&c9).is_trivial());
    assert_eq!(nilpotency_class(&c9).unwrap(), 1);
    assert_eq!(upper_central_series(&c9).unwrap().len(), 2);

    let e = view("extraspecial-27-exp3");
    assert_eq!(center(&e).order(), 3);
    assert_eq!(derived_subgroup(&e), center(&e));
    assert_eq!(nilpotency_class(&e).unwrap(), 2);
}

#[test]
fn dihedral_upper_central_series_via_quotient_centers() {
    let g = view("dihedral-16");
    let series = upper_central_series(&g).unwrap();
    let orders: Vec<usize> = series.iter().skip(1).map(|s| s.order()).collect();
    // maximal class of order 2^4 means class 3, so the series has three steps
    assert_eq!(orders, [2, 4, 16]);
    // independent: Z_{i+1} is the preimage of the brute-force center of G / Z_i
    let mut zi = Subgroup::trivial(&g);
    for expected in &series[1..] {
        let q = g.quotient(&zi).unwrap();
        let (_, proj) = q.projection().unwrap();
        let zq = brute_center(&q);
        let pre: Vec<usize> = (0..g.order())
            .filter(|&x| zq.contains(&(proj[x] as usize)))
            .collect();
        zi = Subgroup::from_members(&g, &pre).unwrap();
        assert_eq!(&zi, expected);
    }
}

#[test]
fn series_lengths_agree_with_class() {
    for g in all_views() {
        let c = nilpotency_class(&g).unwrap();
        assert_eq!(lower_central_series(&g).unwrap().len(), c + 1);
        assert_eq!(upper_central_series(&g).unwrap().len(), c + 1);
        let lcs = lower_central_series(&g).unwrap();
        assert!(lcs.windows(2).all(|w| w[1].is_subset_of(&w[0])));
        if c >= 1 {
            assert_eq!(lcs[1], derived_subgroup(&g));
        }
        let ucs = upper_central_series(&g).unwrap();
        assert!(ucs.windows(2).all(|w| w[0].is_subset_of(&w[1])));
    }
}

#[test]
fn maximal_class_groups_have_center_of_order_p() {
    for g in non_abelian_views() {
        if coclass(&g).unwrap() == 1 {
            assert_eq!(center(&g).order(), g.prime() as usize, "{}", g.name());
        }
    }
}

#[test]
fn paper_class_and_series() {
    let g = view("paper-3^7");
    assert_eq!(nilpotency_class(&g).unwrap(), 4);
    assert_eq!(coclass(&g).unwrap(), 3);
    let ucs = upper_central_series(&g).unwrap();
    assert_eq!(ucs[2].order() / ucs[1].order(), 9);
}

#[test]
fn frattini_examples() {
    let g = view("paper-3^7");
    let (phi, d) = frattini_and_rank(&g);
    assert_eq!(d, 2);
    let g4 = gen("paper-3^7", 4);
    assert!(phi.contains(g4));
    assert!(!derived_subgroup(&g).contains(g4));

    let (phi, d) = frattini_and_rank(&view("c3xc3"));
    assert!(phi.is_trivial());
    assert_eq!(d, 2);
    let (phi, d) = frattini_and_rank(&view("c9"));
    assert_eq!(phi.order(), 3);
    assert_eq!(d, 1);
}

#[test]
fn rank_is_minimal_generator_count() {
    for g in all_views() {
        let (_, d) = frattini_and_rank(&g);
        let whole = Subgroup::whole(&g);
        let gens = minimal_generators(&whole);
        assert_eq!(gens.len(), d, "{}", g.name());
        assert!(Subgroup::generated(&g, &gens).is_whole());
        if g.order() <= 81 {
            // no generating set with fewer than d elements
            let fewer = d.saturating_sub(1);
            let generates_with = |k: usize| -> bool {
                let n = g.order();
                match k {
                    0 => n == 1,
                    1 => (0..n).any(|a| Subgroup::generated(&g, &[a]).is_whole()),
                    2 => {
                        (0..n).any(|a| (a..n).any(|b| Subgroup::generated(&g, &[a, b]).is_whole()))
                    }
                    _ => true,
                }
            };
            if fewer <= 2 {
                assert!(!generates_with(fewer), "{}", g.name());
            }
        }
    }
}

#[test]
fn paper_product_and_intersection() {
    let g = view("paper-3^7");
    let z = center(&g);
    let d = derived_subgroup(&g);
    let meet = z.intersection(&d).unwrap();
    assert_eq!(meet.order(), 3);
    assert_eq!(meet, Subgroup::generated(&g, &[gen("paper-3^7", 7)]));
    let dz = d.product(&z).unwrap();
    assert_eq!(dz.order(), 81 * 9 / 3);
    // element-set product computed independently
    let set: BTreeSet<usize> = d
        .members()
        .iter()
        .flat_map(|&a| z.members().iter().map(|&b| g.mul(a, b)).collect::<Vec<_>>())
        .collect();
    assert_eq!(members(&dz), set);
    assert_eq!(d.product(&d).unwrap(), d);
    assert_eq!(Subgroup::trivial(&g).product(&z).unwrap(), z);
    assert_eq!(z.intersection(&z).unwrap(), z);
    assert!(z.intersection(&Subgroup::trivial(&g)).unwrap().is_trivial());
}

#[test]
fn paper_quotients() {
    let g = view("paper-3^7");
    let z = center(&g);
    let gz = g.quotient(&z).unwrap();
    assert_eq!(gz.order(), 243);
    assert_eq!(nilpotency_class(&gz).unwrap(), 3);
    let d = derived_subgroup(&g);
    let q = g.quotient(&d.product(&z).unwrap()).unwrap();
    assert_eq!(q.order(), 9);
    assert_eq!(abelian_invariants(&q).unwrap().exponents(), &[1, 1]);
    let ab = g.quotient(&d).unwrap();
    assert_eq!(abelian_invariants(&ab).unwrap().exponents(), &[2, 1]);
    // g1 has order 9 modulo G' and g2 order 3
    let (_, proj) = ab.projection().unwrap();
    assert_eq!(ab.element_order(proj[gen("paper-3^7", 1)] as usize), 9);
    assert_eq!(ab.element_order(proj[gen("paper-3^7", 2)] as usize), 3);
    assert_eq!(g.quotient(&Subgroup::whole(&g)).unwrap().order(), 1);
}

#[test]
fn quotient_requires_normal_subgroup() {
    let g = view("extraspecial-27-exp3");
    let h = Subgroup::generated(&g, &[gen("extraspecial-27-exp3", 1)]);
    assert_eq!(g.quotient(&h).unwrap_err(), GroupError::NotNormal);
}

#[test]
fn subgroup_pulls_back_through_quotient() {
    let g = view("paper-3^7");
    let z = center(&g);
    let q = g.quotient(&z).unwrap();
    let zq = center(&q);
    let z2 = Subgroup::preimage(&zq).unwrap();
    assert_eq!(z2, upper_central_series(&g).unwrap()[2]);
    assert_eq!(z2.image_in(&q).unwrap(), zq);
}

#[test]
fn abelian_invariants_examples() {
    assert_eq!(
        subgroup_invariants(&center(&view("paper-3^7")))
            .unwrap()
            .exponents(),
        &[2]
    );
    assert_eq!(
        abelian_invariants(&view("c3xc3")).unwrap().exponents(),
        &[1, 1]
    );
    assert!(abelian_invariants(&view("dihedral-16")).is_err());
}

#[test]
fn abelian_invariants_are_backend_independent() {
    let pc = abelian_view(3, &[2, 1]);
    let table = FiniteGroupView::from_cayley_table("c9xc3-table", 3, &pc.cayley_rows()).unwrap();
    assert_eq!(
        abelian_invariants(&pc).unwrap(),
        abelian_invariants(&table).unwrap()
    );
    assert_eq!(abelian_invariants(&table).unwrap().exponents(), &[2, 1]);
}

#[test]
fn running_assumptions_hold_on_corpus() {
    for g in non_abelian_views() {
        let z = center(&g);
        let class = nilpotency_class(&g).unwrap();
        if !z.is_subset_of(&derived_subgroup(&g)) && class >= 3 {
            assert_ne!(coclass(&g).unwrap(), 1, "{}", g.name());
            assert!(z.order() >= (g.prime() as usize).pow(2), "{}", g.name());
            assert!(g.log_order() >= 5, "{}", g.name());
        }
    }
}

#[test]
fn element_ids_are_lexicographic_ranks() {
    assert_eq!(id("paper-3^7", &[0, 0, 0, 1, 0, 0, 0]), gen("paper-3^7", 4));
}

fn subgroup_strategy() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (
        proptest::collection::vec(0usize..729, 1..3),
        proptest::collection::vec(0usize..729, 1..3),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_order_identity((a, b) in subgroup_strategy()) {
        let g = view("class3-729");
        let a = Subgroup::normal_closure(&g, &a, g.generators());
        let b = Subgroup::generated(&g, &b);
        let ab = a.product(&b).unwrap();
        let meet = a.intersection(&b).unwrap();
        prop_assert_eq!(ab.order() * meet.order(), a.order() * b.order());
        prop_assert_eq!(g.order() % ab.order(), 0);
        prop_assert!(a.is_normal());
    }

    #[test]
    fn quotient_order_and_projection(seeds in proptest::collection::vec(0usize..243, 1..3)) {
        let g = view("coclass2-243-a");
        let n = Subgroup::normal_closure(&g, &seeds, g.generators());
        let q = g.quotient(&n).unwrap();
        prop_assert_eq!(q.order() * n.order(), g.order());
        let (parent, proj) = q.projection().unwrap();
        prop_assert!(Arc::ptr_eq(parent, &g));
        for a in (0..g.order()).step_by(7) {
            for b in (0..g.order()).step_by(11) {
                prop_assert_eq!(
                    proj[g.mul(a, b)] as usize,
                    q.mul(proj[a] as usize, proj[b] as usize)
                );
            }
        }
    }
}
