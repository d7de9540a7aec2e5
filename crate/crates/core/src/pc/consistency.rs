//! Presentation consistency checks.
//!
//! A presentation is accepted when (a) the elements reachable from the
//! identity by right multiplication with generators number exactly `p^n`,
//! (b) collection is associative on every generator triple, on the
//! power overlaps `g_j^p g_i`, `g_j g_i^p`, `g_i^p g_i`, and on a fixed
//! sample of element triples, and (c) every defining relation evaluates to
//! its stated right-hand side.
//!
//! The sample is drawn from the 64-bit linear congruential sequence
//! `s <- s * 6364136223846793005 + 1442695040888963407 (mod 2^64)`,
//! seeded with `SAMPLE_SEED`; each index is `(s >> 33) mod |G|`, and three
//! consecutive indices form one triple.

use serde::Serialize;

use super::presentation::{GroupElement, PcPresentation, MAX_ENUMERATION_ORDER};
use crate::exec::Exec;

pub const DEFAULT_SAMPLE_TRIPLES: usize = 10_000;
pub const SAMPLE_SEED: u64 = 0x2545_F491_4F6C_DD1D;
/// Failures of each kind kept in a report; later ones are only counted.
const MAX_LISTED: usize = 16;

/// The documented deterministic index sequence used for sampling.
#[derive(Clone, Debug)]
pub struct SampleSequence {
    state: u64,
    modulus: u64,
}

impl SampleSequence {
    pub fn new(modulus: u64) -> Self {
        SampleSequence {
            state: SAMPLE_SEED,
            modulus,
        }
    }
}

impl Iterator for SampleSequence {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        self.state = self
            .state
            .wrapping_mul(6_364_136_223_846_793_005)
            .wrapping_add(1_442_695_040_888_963_407);
        Some((self.state >> 33) % self.modulus)
    }
}

/// `count` triples of element identifiers from [`SampleSequence`].
pub fn sample_triples(order: u64, count: usize) -> Vec<[u64; 3]> {
    let mut seq = SampleSequence::new(order);
    (0..count)
        .map(|_| {
            [
                seq.next().unwrap(),
                seq.next().unwrap(),
                seq.next().unwrap(),
            ]
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConsistencyFailure {
    Closure {
        reached: u64,
        expected: u64,
    },
    Associativity {
        a: GroupElement,
        b: GroupElement,
        c: GroupElement,
    },
    Relation {
        relation: String,
        expected: GroupElement,
        found: GroupElement,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistencyReport {
    pub name: String,
    pub order: u64,
    /// `None` when the order is too large to enumerate.
    pub closure_size: Option<u64>,
    pub triples_checked: usize,
    pub associativity_failures: usize,
    pub relation_failures: usize,
    pub failures: Vec<ConsistencyFailure>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.associativity_failures == 0
            && self.relation_failures == 0
            && self.closure_size.is_none_or(|c| c == self.order)
    }
}

fn closure_size(g: &PcPresentation) -> u64 {
    let order = g.order() as usize;
    let mut seen = vec![false; order];
    let id = g.identity();
    seen[g.element_id(&id)] = true;
    let mut frontier = vec![id];
    let mut count = 1u64;
    while let Some(x) = frontier.pop() {
        for i in 0..g.ngens() {
            let y = g.multiply_by_generator(&x, i);
            let k = g.element_id(&y);
            if !seen[k] {
                seen[k] = true;
                count += 1;
                frontier.push(y);
            }
        }
    }
    count
}

/// Runs all checks with the default sample size.
pub fn check_consistency(g: &PcPresentation) -> ConsistencyReport {
    check_consistency_with(g, DEFAULT_SAMPLE_TRIPLES, Exec::default())
}

pub fn check_consistency_with(g: &PcPresentation, samples: usize, exec: Exec) -> ConsistencyReport {
    let order = g.order();
    let n = g.ngens();
    let p = g.prime() as i64;
    let mut failures = Vec::new();

    let closure = (order <= MAX_ENUMERATION_ORDER).then(|| closure_size(g));
    if let Some(reached) = closure {
        if reached != order {
            failures.push(ConsistencyFailure::Closure {
                reached,
                expected: order,
            });
        }
    }

    // Generator triples and power overlaps.
    let gens: Vec<GroupElement> = (1..=n).map(|i| g.generator(i)).collect();
    let mut triples: Vec<[GroupElement; 3]> = Vec::new();
    for a in &gens {
        for b in &gens {
            for c in &gens {
                triples.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    for (j, gj) in gens.iter().enumerate() {
        let gj_pm1 = g.power(gj, p - 1);
        for gi in &gens[..=j] {
            let gi_pm1 = g.power(gi, p - 1);
            triples.push([gj_pm1.clone(), gj.clone(), gi.clone()]);
            triples.push([gj.clone(), gi.clone(), gi_pm1.clone()]);
        }
    }
    if order <= MAX_ENUMERATION_ORDER {
        for [a, b, c] in sample_triples(order, samples) {
            triples.push([
                g.element_from_id(a as usize),
                g.element_from_id(b as usize),
                g.element_from_id(c as usize),
            ]);
        }
    }
    let bad: Vec<Option<usize>> = exec.map_range(triples.len(), |t| {
        let [a, b, c] = &triples[t];
        let left = g.collect_product(&g.collect_product(a, b), c);
        let right = g.collect_product(a, &g.collect_product(b, c));
        (left != right).then_some(t)
    });
    let bad: Vec<usize> = bad.into_iter().flatten().collect();
    for &t in bad.iter().take(MAX_LISTED) {
        let [a, b, c] = triples[t].clone();
        failures.push(ConsistencyFailure::Associativity { a, b, c });
    }

    // Defining relations.
    let mut relation_failures = 0;
    let mut record = |relation: String, expected: GroupElement, found: GroupElement| {
        if expected != found {
            relation_failures += 1;
            if relation_failures <= MAX_LISTED {
                failures.push(ConsistencyFailure::Relation {
                    relation,
                    expected,
                    found,
                });
            }
        }
    };
    for i in 1..=n {
        let found = g.power(&g.generator(i), p);
        record(format!("pow {i}"), g.power_relation(i), found);
    }
    for j in 1..=n {
        for i in 1..j {
            let found = g.commutator(&g.generator(j), &g.generator(i));
            record(format!("comm {j} {i}"), g.commutator_relation(j, i), found);
        }
    }

    ConsistencyReport {
        name: g.name().to_string(),
        order,
        closure_size: closure,
        triples_checked: triples.len(),
        associativity_failures: bad.len(),
        relation_failures,
        failures,
    }
}
