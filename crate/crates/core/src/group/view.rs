use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use super::{GroupError, Subgroup};
use crate::exec::Exec;
use crate::pc::PcPresentation;

/// Largest order a view will materialize (element ids are stored as `u16`).
pub const MAX_VIEW_ORDER: usize = 6561;

/// Where the elements of a view come from.
#[derive(Clone)]
pub enum Backing {
    /// Element `i` is the normal form with lexicographic rank `i`.
    Pc(Arc<PcPresentation>),
    /// Element `i` is the `i`-th coset, ordered by least member.
    Quotient {
        parent: Arc<FiniteGroupView>,
        /// Parent element id to coset id.
        projection: Vec<u16>,
        /// Least parent element of each coset.
        representatives: Vec<usize>,
    },
    /// A bare Cayley table.
    Table,
}

impl fmt::Debug for Backing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backing::Pc(p) => write!(f, "Pc({})", p.name()),
            Backing::Quotient { parent, .. } => write!(f, "Quotient(of {})", parent.name()),
            Backing::Table => write!(f, "Table"),
        }
    }
}

/// A finite p-group with a materialized Cayley table. The identity is
/// always element 0.
#[derive(Debug)]
pub struct FiniteGroupView {
    name: String,
    prime: u32,
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    generators: Vec<usize>,
    backing: Backing,
}

fn log_p(prime: u32, order: usize) -> Option<u32> {
    let mut k = 0;
    let mut x = order;
    while x > 1 {
        if !x.is_multiple_of(prime as usize) {
            return None;
        }
        x /= prime as usize;
        k += 1;
    }
    Some(k)
}

impl FiniteGroupView {
    /// Materializes the Cayley table of a pc presentation.
    pub fn from_presentation(pres: Arc<PcPresentation>) -> Result<Arc<Self>, GroupError> {
        Self::from_presentation_with(pres, Exec::default())
    }

    pub fn from_presentation_with(
        pres: Arc<PcPresentation>,
        exec: Exec,
    ) -> Result<Arc<Self>, GroupError> {
        let order = pres.order();
        if order > MAX_VIEW_ORDER as u64 {
            return Err(GroupError::TooLarge(order));
        }
        let order = order as usize;
        let n = pres.ngens();
        let p = pres.prime() as usize;

        // right_gen[a * n + k] = a * g_k, by collection.
        let right_gen: Vec<Vec<u16>> = exec.map_range(order, |a| {
            let x = pres.element_from_id(a);
            (0..n)
                .map(|k| pres.element_id(&pres.multiply_by_generator(&x, k)) as u16)
                .collect()
        });

        // b = pred(b) * g_k where k is the last nonzero coordinate of b.
        let mut pred = vec![0usize; order];
        let mut last = vec![0usize; order];
        for b in 1..order {
            let mut k = n - 1;
            let mut weight = 1usize;
            let mut rest = b;
            while rest % p == 0 {
                rest /= p;
                k -= 1;
                weight *= p;
            }
            pred[b] = b - weight;
            last[b] = k;
        }

        let mut table = vec![0u16; order * order];
        exec.fill_rows(&mut table, order, |a, row| {
            row[0] = a as u16;
            for b in 1..order {
                row[b] = right_gen[row[pred[b]] as usize][last[b]];
            }
        });

        let generators = (0..n).map(|k| p.pow((n - 1 - k) as u32)).collect();
        Self::validated(
            pres.name().to_string(),
            pres.prime(),
            order,
            table,
            generators,
            Backing::Pc(pres),
            exec,
        )
    }

    /// Wraps an explicit Cayley table (`table[a][b] = a * b`, element 0 the
    /// identity). Associativity is verified exhaustively.
    pub fn from_cayley_table(
        name: impl Into<String>,
        prime: u32,
        rows: &[Vec<usize>],
    ) -> Result<Arc<Self>, GroupError> {
        let order = rows.len();
        if order == 0 || order > MAX_VIEW_ORDER {
            return Err(GroupError::TooLarge(order as u64));
        }
        if !crate::pc::is_prime(prime as u64) || log_p(prime, order).is_none() {
            return Err(GroupError::NotPGroup { order, prime });
        }
        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order || row.iter().any(|&x| x >= order) {
                return Err(GroupError::NotAGroup("table is not square".into()));
            }
            table.extend(row.iter().map(|&x| x as u16));
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let l = table[table[a * order + b] as usize * order + c];
                    let r = table[a * order + table[b * order + c] as usize];
                    if l != r {
                        return Err(GroupError::NotAGroup(format!(
                            "({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        let generators = greedy_generators(order, &table);
        Self::validated(
            name.into(),
            prime,
            order,
            table,
            generators,
            Backing::Table,
            Exec::default(),
        )
    }

    /// Checks identity, the Latin-square property, generation and (Light's
    /// test) associativity `(x g) y = x (g y)` for generators `g`.
    fn validated(
        name: String,
        prime: u32,
        order: usize,
        table: Vec<u16>,
        generators: Vec<usize>,
        backing: Backing,
        exec: Exec,
    ) -> Result<Arc<Self>, GroupError> {
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return Err(GroupError::NotAGroup(
                    "element 0 is not the identity".into(),
                ));
            }
        }
        let mut inverses = vec![u16::MAX; order];
        for (a, inverse) in inverses.iter_mut().enumerate() {
            let mut seen = vec![false; order];
            for b in 0..order {
                let c = at(a, b);
                if seen[c] {
                    return Err(GroupError::NotAGroup(format!("row {a} repeats {c}")));
                }
                seen[c] = true;
                if c == 0 {
                    *inverse = b as u16;
                }
            }
        }
        // columns
        for b in 0..order {
            let mut seen = vec![false; order];
            for a in 0..order {
                let c = at(a, b);
                if seen[c] {
                    return Err(GroupError::NotAGroup(format!("column {b} repeats {c}")));
                }
                seen[c] = true;
            }
        }
        let mut reached = vec![false; order];
        reached[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in &generators {
                let y = at(x, g);
                if !reached[y] {
                    reached[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != order {
            return Err(GroupError::NotAGroup("generators do not generate".into()));
        }
        let bad = exec.count_range(order, |x| {
            generators.iter().any(|&g| {
                let xg = at(x, g);
                (0..order).any(|y| at(xg, y) != at(x, at(g, y)))
            })
        });
        if bad > 0 {
            return Err(GroupError::NotAGroup(format!(
                "multiplication is not associative ({bad} rows fail)"
            )));
        }
        if log_p(prime, order).is_none() {
            return Err(GroupError::NotPGroup { order, prime });
        }
        Ok(Arc::new(FiniteGroupView {
            name,
            prime,
            order,
            table,
            inverses,
            generators,
            backing,
        }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `log_p |G|`.
    pub fn log_order(&self) -> u32 {
        log_p(self.prime, self.order).expect("order is a power of the prime")
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    pub fn presentation(&self) -> Option<&Arc<PcPresentation>> {
        match &self.backing {
            Backing::Pc(p) => Some(p),
            _ => None,
        }
    }

    /// Natural epimorphism from the parent, for quotient views.
    pub fn projection(&self) -> Option<(&Arc<FiniteGroupView>, &[u16])> {
        match &self.backing {
            Backing::Quotient {
                parent, projection, ..
            } => Some((parent, projection)),
            _ => None,
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut result = 0;
        let mut sq = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        result
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// `g^-1 a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| {
            self.generators
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    /// Human-readable element name: a normal-form word for pc views, a
    /// bracketed representative for quotients.
    pub fn label(&self, a: usize) -> String {
        match &self.backing {
            Backing::Pc(p) => p.element_from_id(a).to_string(),
            Backing::Quotient {
                parent,
                representatives,
                ..
            } => format!("[{}]", parent.label(representatives[a])),
            Backing::Table => format!("e{a}"),
        }
    }

    /// Explicit Cayley table rows (useful for building table-backed copies).
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// `G / N` as a table-backed view retaining the natural epimorphism.
    pub fn quotient(self: &Arc<Self>, normal: &Subgroup) -> Result<Arc<Self>, GroupError> {
        if !Arc::ptr_eq(normal.parent(), self) {
            return Err(GroupError::ParentMismatch);
        }
        if !normal.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![u16::MAX; self.order];
        let mut representatives = Vec::new();
        for x in 0..self.order {
            if projection[x] != u16::MAX {
                continue;
            }
            let c = representatives.len() as u16;
            representatives.push(x);
            for &m in normal.members() {
                projection[self.mul(x, m)] = c;
            }
        }
        let q = representatives.len();
        let mut table = vec![0u16; q * q];
        for (i, &ri) in representatives.iter().enumerate() {
            for (j, &rj) in representatives.iter().enumerate() {
                table[i * q + j] = projection[self.mul(ri, rj)];
            }
        }
        let generators: Vec<usize> = self
            .generators
            .iter()
            .map(|&g| projection[g] as usize)
            .filter(|&g| g != 0)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        Self::validated(
            format!("{}/N{}", self.name, normal.order()),
            self.prime,
            q,
            table,
            generators,
            Backing::Quotient {
                parent: Arc::clone(self),
                projection,
                representatives,
            },
            Exec::default(),
        )
    }
}

/// Greedy generating set: scan ids in order, keep those outside the span.
fn greedy_generators(order: usize, table: &[u16]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut member = vec![false; order];
    member[0] = true;
    let mut members = vec![0usize];
    for x in 1..order {
        if member[x] {
            continue;
        }
        gens.push(x);
        let mut stack = members.clone();
        while let Some(y) = stack.pop() {
            for &g in &gens {
                let z = table[y * order + g] as usize;
                if !member[z] {
                    member[z] = true;
                    members.push(z);
                    stack.push(z);
                }
            }
        }
    }
    gens
}
