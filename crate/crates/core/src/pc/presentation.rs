use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order for which elements may be enumerated or indexed.
pub const MAX_ENUMERATION_ORDER: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("ngens must be at least 1")]
    NoGenerators,
    #[error("group order {prime}^{ngens} does not fit in 64 bits")]
    OrderTooLarge { prime: u32, ngens: usize },
    #[error("generator index {index} out of range 1..={ngens}")]
    GeneratorOutOfRange { index: usize, ngens: usize },
    #[error("relation `{relation}` expects {expected} exponents, found {found}")]
    WrongLength {
        relation: String,
        expected: usize,
        found: usize,
    },
    #[error("exponent {value} in relation `{relation}` is out of range (-{prime}, {prime})")]
    ExponentOutOfRange {
        relation: String,
        value: i64,
        prime: u32,
    },
    #[error("relation `{relation}` violates the weighting: g{index} occurs but only generators after g{bound} are allowed")]
    WeightingViolation {
        relation: String,
        index: usize,
        bound: usize,
    },
    #[error("commutator relation `comm {j} {i}` needs j > i")]
    CommutatorOrder { j: usize, i: usize },
    #[error("duplicate relation `{0}`")]
    DuplicateRelation(String),
}

/// An element in normal form `g_1^{e_1} ... g_n^{e_n}` with `0 <= e_i < p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement(Vec<u32>);

impl GroupElement {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub(crate) fn from_raw(exps: Vec<u32>) -> Self {
        GroupElement(exps)
    }

    pub(crate) fn raw_mut(&mut self) -> &mut Vec<u32> {
        &mut self.0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "g{}", i + 1)?;
            } else {
                write!(f, "g{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A weighted power-commutator presentation of a group of order `p^n`.
///
/// Generators are numbered from 1 in the file format and in error messages;
/// internally indices are 0-based. `[g_j, g_i]` for `j > i` is stored as an
/// exponent vector, as is the image of `g_i^p`. Missing relations are trivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    name: String,
    prime: u32,
    ngens: usize,
    powers: Vec<Option<Vec<u32>>>,
    commutators: BTreeMap<(usize, usize), Vec<u32>>,
    pub(crate) pow_letters: Vec<Vec<usize>>,
    /// `comm_letters[j][i]` for `i < j`.
    pub(crate) comm_letters: Vec<Vec<Vec<usize>>>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn letters(exps: &[u32]) -> Vec<usize> {
    exps.iter()
        .enumerate()
        .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
        .collect()
}

impl PcPresentation {
    /// Builds and validates a presentation. Indices are 1-based as in the
    /// file format; exponents may be negative and are reduced mod `p`.
    pub fn new(
        name: impl Into<String>,
        prime: u64,
        ngens: usize,
        powers: &[(usize, Vec<i64>)],
        commutators: &[((usize, usize), Vec<i64>)],
    ) -> Result<Self, PresentationError> {
        let mut builder = PresentationBuilder::new(name, prime, ngens)?;
        for (i, v) in powers {
            builder.power(*i, v)?;
        }
        for ((j, i), v) in commutators {
            builder.commutator(*j, *i, v)?;
        }
        Ok(builder.finish())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// `p^n`.
    pub fn order(&self) -> u64 {
        (self.prime as u64).pow(self.ngens as u32)
    }

    /// Image of `g_i^p` (1-based `i`), identity when no relation was given.
    pub fn power_relation(&self, i: usize) -> GroupElement {
        match &self.powers[i - 1] {
            Some(v) => GroupElement(v.clone()),
            None => self.identity(),
        }
    }

    /// Value of `[g_j, g_i]` for `j > i` (1-based).
    pub fn commutator_relation(&self, j: usize, i: usize) -> GroupElement {
        match self.commutators.get(&(j - 1, i - 1)) {
            Some(v) => GroupElement(v.clone()),
            None => self.identity(),
        }
    }

    /// Number of power relations with a nontrivial right-hand side.
    pub fn nontrivial_power_relations(&self) -> usize {
        self.powers
            .iter()
            .filter(|v| v.as_ref().is_some_and(|v| v.iter().any(|&e| e != 0)))
            .count()
    }

    pub fn nontrivial_commutator_relations(&self) -> usize {
        self.commutators
            .values()
            .filter(|v| v.iter().any(|&e| e != 0))
            .count()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.ngens])
    }

    /// The generator `g_i`, 1-based.
    pub fn generator(&self, i: usize) -> GroupElement {
        assert!(
            i >= 1 && i <= self.ngens,
            "generator index {i} out of range"
        );
        let mut v = vec![0; self.ngens];
        v[i - 1] = 1;
        GroupElement(v)
    }

    /// Normal-form element from an exponent vector; `None` unless every
    /// entry lies in `[0, p)` and the length is `n`.
    pub fn element(&self, exps: &[u32]) -> Option<GroupElement> {
        (exps.len() == self.ngens && exps.iter().all(|&e| e < self.prime))
            .then(|| GroupElement(exps.to_vec()))
    }

    /// Lexicographic rank of the exponent vector (`g_1` most significant).
    pub fn element_id(&self, a: &GroupElement) -> usize {
        let p = self.prime as usize;
        a.0.iter().fold(0usize, |acc, &e| acc * p + e as usize)
    }

    pub fn element_from_id(&self, mut id: usize) -> GroupElement {
        let p = self.prime as usize;
        let mut v = vec![0u32; self.ngens];
        for slot in v.iter_mut().rev() {
            *slot = (id % p) as u32;
            id /= p;
        }
        GroupElement(v)
    }

    /// All `p^n` normal forms in lexicographic order; the position of an
    /// element is its identifier.
    ///
    /// Panics if the order exceeds [`MAX_ENUMERATION_ORDER`].
    pub fn enumerate_elements(&self) -> Vec<GroupElement> {
        let order = self.order();
        assert!(
            order <= MAX_ENUMERATION_ORDER,
            "group of order {order} is too large to enumerate"
        );
        (0..order as usize)
            .map(|id| self.element_from_id(id))
            .collect()
    }

    /// Renders the presentation in the line-oriented file format.
    pub fn to_file_format(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("group {}\n", self.name));
        out.push_str(&format!("prime {}\n", self.prime));
        out.push_str(&format!("ngens {}\n", self.ngens));
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        for (i, v) in self.powers.iter().enumerate() {
            if let Some(v) = v {
                out.push_str(&format!("pow {}: {}\n", i + 1, join(v)));
            }
        }
        for ((j, i), v) in &self.commutators {
            out.push_str(&format!("comm {} {}: {}\n", j + 1, i + 1, join(v)));
        }
        out.push_str("end\n");
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Incremental construction used by the parser so that errors can be tied
/// to the line that introduced them.
#[derive(Debug)]
pub(crate) struct PresentationBuilder {
    name: String,
    prime: u32,
    ngens: usize,
    powers: Vec<Option<Vec<u32>>>,
    commutators: BTreeMap<(usize, usize), Vec<u32>>,
}

impl PresentationBuilder {
    pub(crate) fn new(
        name: impl Into<String>,
        prime: u64,
        ngens: usize,
    ) -> Result<Self, PresentationError> {
        if !is_prime(prime) || prime > u32::MAX as u64 {
            return Err(PresentationError::NotPrime(prime));
        }
        if ngens == 0 {
            return Err(PresentationError::NoGenerators);
        }
        if (prime as u128)
            .checked_pow(ngens as u32)
            .is_none_or(|o| o > u64::MAX as u128)
        {
            return Err(PresentationError::OrderTooLarge {
                prime: prime as u32,
                ngens,
            });
        }
        Ok(PresentationBuilder {
            name: name.into(),
            prime: prime as u32,
            ngens,
            powers: vec![None; ngens],
            commutators: BTreeMap::new(),
        })
    }

    fn check_index(&self, index: usize) -> Result<(), PresentationError> {
        if index == 0 || index > self.ngens {
            return Err(PresentationError::GeneratorOutOfRange {
                index,
                ngens: self.ngens,
            });
        }
        Ok(())
    }

    /// Validates length, range and weighting; `bound` is the 1-based largest
    /// index on the left-hand side.
    fn normalize(
        &self,
        relation: &str,
        exps: &[i64],
        bound: usize,
    ) -> Result<Vec<u32>, PresentationError> {
        if exps.len() != self.ngens {
            return Err(PresentationError::WrongLength {
                relation: relation.to_string(),
                expected: self.ngens,
                found: exps.len(),
            });
        }
        let p = self.prime as i64;
        let mut out = Vec::with_capacity(exps.len());
        for (k, &e) in exps.iter().enumerate() {
            if e <= -p || e >= p {
                return Err(PresentationError::ExponentOutOfRange {
                    relation: relation.to_string(),
                    value: e,
                    prime: self.prime,
                });
            }
            let e = e.rem_euclid(p) as u32;
            if e != 0 && k < bound {
                return Err(PresentationError::WeightingViolation {
                    relation: relation.to_string(),
                    index: k + 1,
                    bound,
                });
            }
            out.push(e);
        }
        Ok(out)
    }

    pub(crate) fn power(&mut self, i: usize, exps: &[i64]) -> Result<(), PresentationError> {
        self.check_index(i)?;
        let relation = format!("pow {i}");
        if self.powers[i - 1].is_some() {
            return Err(PresentationError::DuplicateRelation(relation));
        }
        let v = self.normalize(&relation, exps, i)?;
        self.powers[i - 1] = Some(v);
        Ok(())
    }

    pub(crate) fn commutator(
        &mut self,
        j: usize,
        i: usize,
        exps: &[i64],
    ) -> Result<(), PresentationError> {
        self.check_index(j)?;
        self.check_index(i)?;
        if j <= i {
            return Err(PresentationError::CommutatorOrder { j, i });
        }
        let relation = format!("comm {j} {i}");
        if self.commutators.contains_key(&(j - 1, i - 1)) {
            return Err(PresentationError::DuplicateRelation(relation));
        }
        let v = self.normalize(&relation, exps, j)?;
        self.commutators.insert((j - 1, i - 1), v);
        Ok(())
    }

    pub(crate) fn finish(self) -> PcPresentation {
        let n = self.ngens;
        let pow_letters = self
            .powers
            .iter()
            .map(|v| v.as_deref().map(letters).unwrap_or_default())
            .collect();
        let mut comm_letters = vec![Vec::new(); n];
        for (j, row) in comm_letters.iter_mut().enumerate() {
            *row = (0..j)
                .map(|i| {
                    self.commutators
                        .get(&(j, i))
                        .map(|v| letters(v))
                        .unwrap_or_default()
                })
                .collect();
        }
        PcPresentation {
            name: self.name,
            prime: self.prime,
            ngens: n,
            powers: self.powers,
            commutators: self.commutators,
            pow_letters,
            comm_letters,
        }
    }
}
