use std::fmt;
use std::sync::Arc;

use super::{FiniteGroupView, GroupError};

/// A subgroup materialized as the sorted set of its element identifiers.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroupView>,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("parent", &self.parent.name())
            .field("order", &self.members.len())
            .finish()
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.parent, &other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn from_mask(parent: &Arc<FiniteGroupView>, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        Subgroup {
            parent: Arc::clone(parent),
            members,
            mask,
        }
    }

    pub fn whole(parent: &Arc<FiniteGroupView>) -> Self {
        Self::from_mask(parent, vec![true; parent.order()])
    }

    pub fn trivial(parent: &Arc<FiniteGroupView>) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Self::from_mask(parent, mask)
    }

    /// The subgroup generated by `seeds`, by breadth-first expansion.
    pub fn generated(parent: &Arc<FiniteGroupView>, seeds: &[usize]) -> Self {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut gens: Vec<usize> = Vec::new();
        for &s in seeds {
            if mask[s] {
                continue;
            }
            gens.push(s);
            // Every current member times every generator, to a fixed point.
            let mut frontier = members.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &x in &frontier {
                    for &g in &gens {
                        let y = parent.mul(x, g);
                        if !mask[y] {
                            mask[y] = true;
                            members.push(y);
                            next.push(y);
                        }
                    }
                }
                frontier = next;
            }
        }
        Self::from_mask(parent, mask)
    }

    /// Smallest subgroup containing `seeds` and normalized by `conjugators`.
    pub fn normal_closure(
        parent: &Arc<FiniteGroupView>,
        seeds: &[usize],
        conjugators: &[usize],
    ) -> Self {
        let mut seeds: Vec<usize> = seeds.to_vec();
        loop {
            let h = Self::generated(parent, &seeds);
            let extra: Vec<usize> = h
                .generating_set()
                .iter()
                .flat_map(|&x| conjugators.iter().map(move |&g| parent.conjugate(x, g)))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            seeds.extend(extra);
        }
    }

    /// Wraps an element set the caller knows to be a subgroup.
    pub(crate) fn from_members_unchecked(parent: &Arc<FiniteGroupView>, members: &[usize]) -> Self {
        let mut mask = vec![false; parent.order()];
        for &m in members {
            mask[m] = true;
        }
        Self::from_mask(parent, mask)
    }

    /// Wraps an element set after checking that it is a subgroup.
    pub fn from_members(
        parent: &Arc<FiniteGroupView>,
        members: &[usize],
    ) -> Result<Self, GroupError> {
        let mut mask = vec![false; parent.order()];
        for &m in members {
            mask[m] = true;
        }
        let s = Self::from_mask(parent, mask);
        if !s.contains(0) || !s.is_closed() {
            return Err(GroupError::NotClosed);
        }
        Ok(s)
    }

    fn is_closed(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.mask[self.parent.mul(a, b)])
        })
    }

    pub fn parent(&self) -> &Arc<FiniteGroupView> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask[a]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        self.members
            .iter()
            .all(|&h| g.generators().iter().all(|&x| self.mask[g.conjugate(h, x)]))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generating_set();
        gens.iter().all(|&a| {
            gens.iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.members
            .iter()
            .any(|&a| self.parent.element_order(a) == n)
    }

    /// Greedy generating set, scanning members in identifier order.
    pub fn generating_set(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut mask = vec![false; g.order()];
        mask[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        for &x in &self.members {
            if mask[x] {
                continue;
            }
            gens.push(x);
            let mut frontier = members.clone();
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &y in &frontier {
                    for &s in &gens {
                        let z = g.mul(y, s);
                        if !mask[z] {
                            mask[z] = true;
                            members.push(z);
                            next.push(z);
                        }
                    }
                }
                frontier = next;
            }
        }
        gens
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        if !Arc::ptr_eq(&self.parent, &other.parent) {
            return Err(GroupError::ParentMismatch);
        }
        let mask = self
            .mask
            .iter()
            .zip(&other.mask)
            .map(|(&a, &b)| a && b)
            .collect();
        Ok(Self::from_mask(&self.parent, mask))
    }

    /// The set `{ab : a in A, b in B}`; an error unless it is a subgroup.
    pub fn product(&self, other: &Subgroup) -> Result<Subgroup, GroupError> {
        if !Arc::ptr_eq(&self.parent, &other.parent) {
            return Err(GroupError::ParentMismatch);
        }
        let g = &self.parent;
        let mut mask = vec![false; g.order()];
        for &a in &self.members {
            for &b in &other.members {
                mask[g.mul(a, b)] = true;
            }
        }
        let s = Self::from_mask(g, mask);
        let mut seeds = self.generating_set();
        seeds.extend(other.generating_set());
        if Self::generated(g, &seeds).order() != s.order() {
            return Err(GroupError::NotClosed);
        }
        Ok(s)
    }

    /// Image under the natural epimorphism onto a quotient of the parent.
    pub fn image_in(&self, quotient: &Arc<FiniteGroupView>) -> Result<Subgroup, GroupError> {
        let (parent, projection) = quotient.projection().ok_or(GroupError::ParentMismatch)?;
        if !Arc::ptr_eq(parent, &self.parent) {
            return Err(GroupError::ParentMismatch);
        }
        let mut mask = vec![false; quotient.order()];
        for &m in &self.members {
            mask[projection[m] as usize] = true;
        }
        Ok(Self::from_mask(quotient, mask))
    }

    /// Full preimage of a subgroup of a quotient view.
    pub fn preimage(sub: &Subgroup) -> Result<Subgroup, GroupError> {
        let (parent, projection) = sub.parent.projection().ok_or(GroupError::ParentMismatch)?;
        let mask = projection
            .iter()
            .map(|&c| sub.contains(c as usize))
            .collect();
        Ok(Self::from_mask(parent, mask))
    }

    /// `|parent : self|`.
    pub fn index(&self) -> usize {
        self.parent.order() / self.order()
    }
}
