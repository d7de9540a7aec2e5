//! Homomorphisms between finite abelian p-groups.
//!
//! For `A = ∏ C_{p^{a_i}}` and `B = ∏ C_{p^{b_j}}`,
//! `|Hom(A, B)| = ∏_{i,j} p^{min(a_i, b_j)}`: a homomorphism is a free
//! choice, for each cyclic factor of `A`, of an image killed by `p^{a_i}`,
//! and `B` has `∏_j p^{min(a_i, b_j)}` such elements.

use std::sync::Arc;

use thiserror::Error;

use crate::group::{abelian_invariants, AbelianType, FiniteGroupView, GroupError, Subgroup};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("prime mismatch: {0} vs {1}")]
    PrimeMismatch(u32, u32),
    #[error("{required} homomorphisms exceed the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("hom count overflows")]
    Overflow,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Exact `|Hom(A, B)|` from the primary-decomposition product.
pub fn hom_order(a: &AbelianType, b: &AbelianType) -> Result<u128, HomError> {
    if a.prime() != b.prime() {
        return Err(HomError::PrimeMismatch(a.prime(), b.prime()));
    }
    let log: u32 = a
        .exponents()
        .iter()
        .flat_map(|&x| b.exponents().iter().map(move |&y| x.min(y)))
        .sum();
    (a.prime() as u128)
        .checked_pow(log)
        .ok_or(HomError::Overflow)
}

/// An explicit basis `b_1, ..., b_k` of an abelian view with the
/// coordinates of every element precomputed.
#[derive(Clone, Debug)]
pub struct AbelianBasis {
    parent: Arc<FiniteGroupView>,
    elements: Vec<usize>,
    orders: Vec<u64>,
    coordinates: Vec<Vec<u64>>,
}

impl AbelianBasis {
    pub fn parent(&self) -> &Arc<FiniteGroupView> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Coordinates of `x`: `x = ∏ b_i^{c_i}` with `0 <= c_i < |b_i|`.
    pub fn coordinates(&self, x: usize) -> &[u64] {
        &self.coordinates[x]
    }

    /// `∏ b_i^{c_i}`.
    pub fn evaluate(&self, coords: &[u64]) -> usize {
        self.elements.iter().zip(coords).fold(0, |acc, (&b, &c)| {
            self.parent.mul(acc, self.parent.power(b, c))
        })
    }

    pub fn abelian_type(&self) -> AbelianType {
        let p = self.parent.prime() as u64;
        AbelianType::new(
            self.parent.prime(),
            self.orders.iter().map(|&o| {
                let mut k = 0;
                let mut x = o;
                while x > 1 {
                    x /= p;
                    k += 1;
                }
                k
            }),
        )
    }
}

/// Greedy basis: for each cyclic factor in decreasing order, the least
/// element of that order whose cyclic subgroup meets the span so far
/// trivially. Such a choice always extends to a basis because a cyclic
/// subgroup of maximal order in `A / span` is a direct factor.
pub fn abelian_basis(a: &Arc<FiniteGroupView>) -> Result<AbelianBasis, HomError> {
    let ty = abelian_invariants(a)?;
    let p = a.prime() as u64;
    let mut span = vec![false; a.order()];
    span[0] = true;
    let mut elements = Vec::new();
    let mut orders = Vec::new();
    for &e in ty.exponents() {
        let target = p.pow(e);
        let pick = (1..a.order())
            .find(|&y| a.element_order(y) == target && !span[a.power(y, target / p)])
            .ok_or_else(|| GroupError::NotAGroup("abelian basis extraction failed".into()))?;
        let cyclic: Vec<usize> = (0..target).map(|k| a.power(pick, k)).collect();
        let current: Vec<usize> = (0..a.order()).filter(|&x| span[x]).collect();
        for &s in &current {
            for &c in &cyclic {
                span[a.mul(s, c)] = true;
            }
        }
        elements.push(pick);
        orders.push(target);
    }

    let mut coordinates: Vec<Option<Vec<u64>>> = vec![None; a.order()];
    let mut coords = vec![0u64; elements.len()];
    loop {
        let x = elements
            .iter()
            .zip(&coords)
            .fold(0, |acc, (&b, &c)| a.mul(acc, a.power(b, c)));
        if coordinates[x].is_some() {
            return Err(GroupError::NotAGroup("basis is not independent".into()).into());
        }
        coordinates[x] = Some(coords.clone());
        // mixed-radix increment, last coordinate fastest
        let mut k = coords.len();
        loop {
            if k == 0 {
                let coordinates = coordinates
                    .into_iter()
                    .map(|c| c.expect("product of orders equals |A|"))
                    .collect();
                return Ok(AbelianBasis {
                    parent: Arc::clone(a),
                    elements,
                    orders,
                    coordinates,
                });
            }
            k -= 1;
            coords[k] += 1;
            if coords[k] < orders[k] {
                break;
            }
            coords[k] = 0;
        }
    }
}

/// A homomorphism from the group spanned by an [`AbelianBasis`], given by
/// the images of the basis elements in a target group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HomDescriptor {
    pub images: Vec<usize>,
}

impl HomDescriptor {
    /// `f(x) = ∏ f(b_i)^{c_i}` in the target group.
    pub fn eval(&self, basis: &AbelianBasis, target: &FiniteGroupView, x: usize) -> usize {
        self.images
            .iter()
            .zip(basis.coordinates(x))
            .fold(0, |acc, (&z, &c)| target.mul(acc, target.power(z, c)))
    }

    /// Values on every domain element, indexed by element id.
    pub fn table(&self, basis: &AbelianBasis, target: &FiniteGroupView) -> Vec<usize> {
        (0..basis.parent().order())
            .map(|x| self.eval(basis, target, x))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&z| z == 0)
    }
}

/// Every homomorphism from `basis`'s group into the abelian subgroup
/// `target`, in lexicographic order of image identifiers.
pub fn enumerate_homs(
    basis: &AbelianBasis,
    target: &Subgroup,
) -> Result<Vec<HomDescriptor>, HomError> {
    enumerate_homs_bounded(basis, target, u128::MAX)
}

/// As [`enumerate_homs`], refusing when more than `budget` maps would result.
pub fn enumerate_homs_bounded(
    basis: &AbelianBasis,
    target: &Subgroup,
    budget: u128,
) -> Result<Vec<HomDescriptor>, HomError> {
    let (pa, pb) = (basis.parent().prime(), target.parent().prime());
    if pa != pb {
        return Err(HomError::PrimeMismatch(pa, pb));
    }
    if !target.is_abelian() {
        return Err(GroupError::NotAbelian.into());
    }
    let tv = target.parent();
    let choices: Vec<Vec<usize>> = basis
        .orders()
        .iter()
        .map(|&o| {
            target
                .members()
                .iter()
                .copied()
                .filter(|&z| tv.power(z, o) == 0)
                .collect()
        })
        .collect();
    let required = choices
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .ok_or(HomError::Overflow)?;
    if required > budget {
        return Err(HomError::BudgetExceeded { required, budget });
    }
    let mut out = Vec::with_capacity(required as usize);
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(HomDescriptor {
            images: idx.iter().zip(&choices).map(|(&i, c)| c[i]).collect(),
        });
        let mut k = idx.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}
