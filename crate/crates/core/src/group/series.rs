//! Characteristic subgroups and series of a finite p-group.

use std::sync::Arc;

use super::{FiniteGroupView, GroupError, Subgroup};

/// `Z(G)`: elements commuting with every generator.
pub fn center(g: &Arc<FiniteGroupView>) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&a| g.generators().iter().all(|&x| g.mul(a, x) == g.mul(x, a)))
        .collect();
    Subgroup::from_members(g, &members).expect("the center is a subgroup")
}

/// `G'`: normal closure of the commutators of generators.
pub fn derived_subgroup(g: &Arc<FiniteGroupView>) -> Subgroup {
    let gens = g.generators();
    let seeds: Vec<usize> = gens
        .iter()
        .flat_map(|&a| gens.iter().map(move |&b| g.commutator(a, b)))
        .collect();
    Subgroup::normal_closure(g, &seeds, gens)
}

/// `[H, G]` for a normal subgroup `H`.
pub fn commutator_with_whole(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let seeds: Vec<usize> = h
        .generating_set()
        .iter()
        .flat_map(|&a| g.generators().iter().map(move |&x| g.commutator(a, x)))
        .collect();
    Subgroup::normal_closure(g, &seeds, g.generators())
}

/// `G = γ_1 > γ_2 > ... > γ_{c+1} = 1`; the last entry is the trivial group.
pub fn lower_central_series(g: &Arc<FiniteGroupView>) -> Result<Vec<Subgroup>, GroupError> {
    let mut series = vec![Subgroup::whole(g)];
    loop {
        let last = series.last().unwrap();
        if last.is_trivial() {
            return Ok(series);
        }
        let next = commutator_with_whole(last);
        if next.order() == last.order() {
            return Err(GroupError::NotNilpotent);
        }
        series.push(next);
    }
}

/// `1 = Z_0 < Z_1 < ... < Z_c = G`; the first entry is the trivial group.
///
/// `Z_{i+1}` is the set of `g` with `[g, x] in Z_i` for every generator `x`,
/// which is the preimage of the center of `G / Z_i`.
pub fn upper_central_series(g: &Arc<FiniteGroupView>) -> Result<Vec<Subgroup>, GroupError> {
    let mut series = vec![Subgroup::trivial(g)];
    loop {
        let last = series.last().unwrap();
        if last.is_whole() {
            return Ok(series);
        }
        let members: Vec<usize> = (0..g.order())
            .filter(|&a| {
                g.generators()
                    .iter()
                    .all(|&x| last.contains(g.commutator(a, x)))
            })
            .collect();
        let next = Subgroup::from_members(g, &members)?;
        if next.order() == last.order() {
            return Err(GroupError::NotNilpotent);
        }
        series.push(next);
    }
}

/// Length of the lower central series (0 for the trivial group).
pub fn nilpotency_class(g: &Arc<FiniteGroupView>) -> Result<usize, GroupError> {
    Ok(lower_central_series(g)?.len() - 1)
}

/// `n - class` for a group of order `p^n`.
pub fn coclass(g: &Arc<FiniteGroupView>) -> Result<usize, GroupError> {
    Ok(g.log_order() as usize - nilpotency_class(g)?)
}

/// `Φ(G) = G' G^p` and `d(G) = log_p |G : Φ(G)|`.
pub fn frattini_and_rank(g: &Arc<FiniteGroupView>) -> (Subgroup, usize) {
    let whole = Subgroup::whole(g);
    let phi = frattini_of(&whole);
    let mut index = whole.order() / phi.order();
    let mut rank = 0;
    while index > 1 {
        index /= g.prime() as usize;
        rank += 1;
    }
    (phi, rank)
}

/// Frattini subgroup of any subgroup `H` of a p-group: `H' H^p`.
pub fn frattini_of(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let p = g.prime() as u64;
    let gens = h.generating_set();
    let mut seeds: Vec<usize> = h.members().iter().map(|&x| g.power(x, p)).collect();
    seeds.extend(
        gens.iter()
            .flat_map(|&a| gens.iter().map(move |&b| g.commutator(a, b))),
    );
    Subgroup::normal_closure(g, &seeds, &gens)
}

/// A minimal generating set of `H`: a lift of a basis of `H / Φ(H)`.
///
/// For pc views candidates are tried by normal-form length, then by leading
/// generator index, so `<g4>` is reported as `g4` rather than a product.
pub fn minimal_generators(h: &Subgroup) -> Vec<usize> {
    let g = h.parent();
    let p = g.prime() as usize;
    // (nonzero base-p digits, leading digit position)
    let shape = |x: usize| {
        let (mut digits, mut k, mut y) = (0, 0, x);
        while y > 0 {
            digits += usize::from(y % p != 0);
            y /= p;
            k += 1;
        }
        (digits, std::cmp::Reverse(k))
    };
    let mut candidates: Vec<usize> = h.members().iter().copied().filter(|&x| x != 0).collect();
    candidates.sort_by_key(|&x| (shape(x), x));
    let mut span = frattini_of(h);
    let mut gens = Vec::new();
    for x in candidates {
        if span.order() == h.order() {
            break;
        }
        if span.contains(x) {
            continue;
        }
        gens.push(x);
        let mut seeds = span.generating_set();
        seeds.extend(&gens);
        span = Subgroup::generated(g, &seeds);
    }
    gens
}
