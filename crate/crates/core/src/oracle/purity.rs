//! Direct-factor search: decides whether `G` has a nontrivial abelian
//! direct factor ("purely non-abelian" means it has none).
//!
//! An abelian direct factor contains a cyclic one, and a central cyclic
//! `C` is a direct factor iff some subgroup `N` has `C ∩ N = 1` and
//! `|C||N| = |G|` (then `G = C × N`, `N` being normal because `C` is
//! central). Such an `N` has index `|C|` and so lies at the end of a chain
//! of maximal subgroups of length `log_p |C|`; the chains are explored level
//! by level with de-duplication.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::group::{center, frattini_and_rank, frattini_of, FiniteGroupView, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PurityVerdict {
    PurelyNonAbelian,
    FactorFound {
        cyclic: Subgroup,
        complement: Subgroup,
    },
    Inconclusive {
        explored: usize,
    },
}

impl PurityVerdict {
    pub fn is_purely_non_abelian(&self) -> bool {
        matches!(self, PurityVerdict::PurelyNonAbelian)
    }
}

impl fmt::Display for PurityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PurityVerdict::PurelyNonAbelian => write!(f, "purely-non-abelian"),
            PurityVerdict::FactorFound { cyclic, complement } => {
                write!(f, "factor C{} x N{}", cyclic.order(), complement.order())
            }
            PurityVerdict::Inconclusive { .. } => write!(f, "inconclusive"),
        }
    }
}

impl Serialize for PurityVerdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Maximal subgroups of `h`: kernels of the nonzero functionals on the
/// elementary abelian quotient `h / Φ(h)`.
pub fn maximal_subgroups(h: &Subgroup) -> Vec<Subgroup> {
    if h.is_trivial() {
        return Vec::new();
    }
    let g = h.parent();
    let p = g.prime() as usize;
    let phi = frattini_of(h);

    // basis of h / Φ(h)
    let mut basis = Vec::new();
    let mut span = phi.clone();
    for &x in h.members() {
        if span.contains(x) {
            continue;
        }
        basis.push(x);
        let mut seeds = span.generating_set();
        seeds.extend(&basis);
        span = Subgroup::generated(g, &seeds);
        if span.order() == h.order() {
            break;
        }
    }
    let d = basis.len();

    // label[x] = coordinates of xΦ(h) in F_p^d
    let mut label: Vec<Option<Vec<usize>>> = vec![None; g.order()];
    let mut v = vec![0usize; d];
    loop {
        let rep = basis
            .iter()
            .zip(&v)
            .fold(0, |acc, (&b, &c)| g.mul(acc, g.power(b, c as u64)));
        for &f in phi.members() {
            label[g.mul(rep, f)] = Some(v.clone());
        }
        let mut k = d;
        let done = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            v[k] += 1;
            if v[k] < p {
                break false;
            }
            v[k] = 0;
        };
        if done {
            break;
        }
    }

    // functionals normalized so the first nonzero coefficient is 1
    let mut out = Vec::new();
    let mut lambda = vec![0usize; d];
    loop {
        let mut k = d;
        let done = loop {
            if k == 0 {
                break true;
            }
            k -= 1;
            lambda[k] += 1;
            if lambda[k] < p {
                break false;
            }
            lambda[k] = 0;
        };
        if done {
            break;
        }
        if lambda.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let members: Vec<usize> = h
            .members()
            .iter()
            .copied()
            .filter(|&x| {
                let l = label[x].as_ref().expect("labelled coset");
                l.iter().zip(&lambda).map(|(a, b)| a * b).sum::<usize>() % p == 0
            })
            .collect();
        out.push(Subgroup::from_members_unchecked(g, &members));
    }
    out
}

/// Cyclic subgroups of `Z(G)` other than 1, ordered by size then least
/// generator.
fn cyclic_central_subgroups(g: &Arc<FiniteGroupView>) -> Vec<Subgroup> {
    let z = center(g);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &x in z.members().iter().skip(1) {
        let c = Subgroup::generated(g, &[x]);
        if seen.insert(c.members().to_vec()) {
            out.push(c);
        }
    }
    out.sort_by_key(|c| c.order());
    out
}

fn search_complement(
    g: &Arc<FiniteGroupView>,
    c: &Subgroup,
    explored: &mut usize,
    budget: usize,
) -> Option<Result<Subgroup, ()>> {
    let p = g.prime() as usize;
    let mut depth = 0;
    let mut x = c.order();
    while x > 1 {
        x /= p;
        depth += 1;
    }
    let mut level = vec![Subgroup::whole(g)];
    for step in 0..depth {
        let remaining = depth - step - 1;
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for h in &level {
            for m in maximal_subgroups(h) {
                *explored += 1;
                if *explored > budget {
                    return Some(Err(()));
                }
                // |M ∩ C| can drop by at most a factor p per further step.
                let meet = m.intersection(c).expect("same parent").order();
                if meet > p.pow(remaining as u32) {
                    continue;
                }
                if seen.insert(m.members().to_vec()) {
                    next.push(m);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .find(|n| n.intersection(c).expect("same parent").is_trivial())
        .map(Ok)
}

/// Searches for a cyclic central direct factor.
pub fn direct_factor_search(g: &Arc<FiniteGroupView>, subgroup_budget: usize) -> PurityVerdict {
    // Fast path: a central element of order p outside Φ(G) splits off.
    let (phi, _) = frattini_and_rank(g);
    let z = center(g);
    let whole = Subgroup::whole(g);
    for &x in z.members().iter().skip(1) {
        if g.element_order(x) == g.prime() as u64 && !phi.contains(x) {
            let cyclic = Subgroup::generated(g, &[x]);
            if let Some(complement) = maximal_subgroups(&whole)
                .into_iter()
                .find(|m| !m.contains(x))
            {
                return PurityVerdict::FactorFound { cyclic, complement };
            }
        }
    }

    let mut explored = 0;
    for c in cyclic_central_subgroups(g) {
        match search_complement(g, &c, &mut explored, subgroup_budget) {
            Some(Ok(complement)) => {
                return PurityVerdict::FactorFound {
                    cyclic: c,
                    complement,
                }
            }
            Some(Err(())) => return PurityVerdict::Inconclusive { explored },
            None => {}
        }
    }
    PurityVerdict::PurelyNonAbelian
}

/// `Ω_1(Z(G)) <= Φ(G)`: every central element of order `p` lies in the
/// Frattini subgroup.
pub fn omega1_center_in_frattini(g: &Arc<FiniteGroupView>) -> bool {
    let (phi, _) = frattini_and_rank(g);
    center(g)
        .members()
        .iter()
        .all(|&x| g.element_order(x) != g.prime() as u64 || phi.contains(x))
}
