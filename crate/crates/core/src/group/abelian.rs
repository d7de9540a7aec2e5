use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::{FiniteGroupView, GroupError, Subgroup};

/// `∏ C_{p^{e_i}}` with `e_1 >= e_2 >= ... >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianType {
    prime: u32,
    exponents: Vec<u32>,
}

impl AbelianType {
    /// Sorts the exponents and drops zeros (trivial factors).
    pub fn new(prime: u32, exponents: impl IntoIterator<Item = u32>) -> Self {
        let mut exponents: Vec<u32> = exponents.into_iter().filter(|&e| e > 0).collect();
        exponents.sort_unstable_by(|a, b| b.cmp(a));
        AbelianType { prime, exponents }
    }

    pub fn trivial(prime: u32) -> Self {
        AbelianType {
            prime,
            exponents: Vec::new(),
        }
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of cyclic factors.
    pub fn rank(&self) -> usize {
        self.exponents.len()
    }

    pub fn log_order(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn order(&self) -> u64 {
        (self.prime as u64).pow(self.log_order())
    }

    pub fn is_cyclic(&self) -> bool {
        self.exponents.len() <= 1
    }

    /// Recovers the type from `c_k = |{a : a^(p^k) = 1}|`, given as
    /// `log_p c_k` for `k = 0, 1, ...` up to stabilization: the number of
    /// exponents `>= k` is `log_p c_k - log_p c_{k-1}`.
    pub fn from_order_counts(prime: u32, log_counts: &[u32]) -> Self {
        let mut exponents = Vec::new();
        let at_least: Vec<u32> = log_counts.windows(2).map(|w| w[1] - w[0]).collect();
        for (k, &m) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(m - next) {
                exponents.push(k as u32 + 1);
            }
        }
        Self::new(prime, exponents)
    }
}

impl fmt::Display for AbelianType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for AbelianType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn exact_log(prime: u32, mut x: u64) -> Option<u32> {
    let mut k = 0;
    while x > 1 {
        if !x.is_multiple_of(prime as u64) {
            return None;
        }
        x /= prime as u64;
        k += 1;
    }
    Some(k)
}

fn invariants_of(g: &FiniteGroupView, members: &[usize]) -> Result<AbelianType, GroupError> {
    let p = g.prime();
    exact_log(p, members.len() as u64).ok_or(GroupError::NotPGroup {
        order: members.len(),
        prime: p,
    })?;
    // log_p of each element order
    let mut tally: Vec<u32> = Vec::new();
    for &a in members {
        let k = exact_log(p, g.element_order(a)).ok_or(GroupError::NotPGroup {
            order: members.len(),
            prime: p,
        })? as usize;
        if tally.len() <= k {
            tally.resize(k + 1, 0);
        }
        tally[k] += 1;
    }
    let mut cumulative = 0u64;
    let mut log_counts = Vec::with_capacity(tally.len());
    for &t in &tally {
        cumulative += t as u64;
        log_counts.push(exact_log(p, cumulative).ok_or(GroupError::NotPGroup {
            order: members.len(),
            prime: p,
        })?);
    }
    Ok(AbelianType::from_order_counts(p, &log_counts))
}

/// Abelian invariants of an abelian view.
pub fn abelian_invariants(g: &Arc<FiniteGroupView>) -> Result<AbelianType, GroupError> {
    if !g.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let all: Vec<usize> = (0..g.order()).collect();
    invariants_of(g, &all)
}

/// Abelian invariants of an abelian subgroup.
pub fn subgroup_invariants(h: &Subgroup) -> Result<AbelianType, GroupError> {
    if !h.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    invariants_of(h.parent(), h.members())
}
