//! Explicit central endomorphisms and automorphisms.
//!
//! Central endomorphisms of `G` are exactly the maps `x -> x f(xG')` for
//! `f` in `Hom(G/G', Z(G))`; they are enumerated from the Hom set and each
//! one is evaluated on every element of `G`.

use std::collections::HashSet;
use std::sync::Arc;

use super::{OracleConfig, OracleError};
use crate::exec::Exec;
use crate::group::{center, derived_subgroup, upper_central_series, FiniteGroupView, Subgroup};
use crate::hom::{abelian_basis, enumerate_homs_bounded, HomDescriptor, HomError};

/// `α(x) = x f(xG')` for a hom descriptor `f: G/G' -> Z(G)`.
#[derive(Clone, Debug)]
pub struct CentralMap {
    pub descriptor: HomDescriptor,
    /// `α(x)` for every element id `x`.
    pub images: Vec<u16>,
    pub bijective: bool,
    /// `f` vanishes on `Z(G)`, i.e. `α` fixes the center pointwise.
    pub fixes_center: bool,
    /// `α(xg) = α(x) α(g)` for all `x` and generators `g`.
    pub endomorphism: bool,
}

impl CentralMap {
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }
}

/// All central endomorphisms, ordered by descriptor.
pub fn central_endomorphisms(
    g: &Arc<FiniteGroupView>,
    config: &OracleConfig,
) -> Result<Vec<CentralMap>, OracleError> {
    if g.is_abelian() {
        return Err(OracleError::Abelian);
    }
    let z = center(g);
    let derived = derived_subgroup(g);
    let abelianization = g.quotient(&derived)?;
    let (_, projection) = abelianization.projection().expect("quotient view");
    let basis = abelian_basis(&abelianization)?;
    let homs = enumerate_homs_bounded(&basis, &z, config.hom_budget).map_err(|e| match e {
        HomError::BudgetExceeded { required, budget } => {
            OracleError::BudgetExceeded { required, budget }
        }
        other => other.into(),
    })?;

    let order = g.order();
    let mut maps = config.exec.map_slice(&homs, |f| {
        let values = f.table(&basis, g);
        let images: Vec<u16> = (0..order)
            .map(|x| g.mul(x, values[projection[x] as usize]) as u16)
            .collect();
        let mut seen = vec![false; order];
        let mut distinct = 0;
        for &y in &images {
            if !seen[y as usize] {
                seen[y as usize] = true;
                distinct += 1;
            }
        }
        let fixes_center = z
            .members()
            .iter()
            .all(|&c| values[projection[c] as usize] == 0);
        let endomorphism = (0..order).all(|x| {
            g.generators().iter().all(|&s| {
                images[g.mul(x, s)] as usize == g.mul(images[x] as usize, images[s] as usize)
            })
        });
        CentralMap {
            descriptor: f.clone(),
            images,
            bijective: distinct == order,
            fixes_center,
            endomorphism,
        }
    });
    maps.sort_by(|a, b| a.descriptor.cmp(&b.descriptor));
    Ok(maps)
}

/// A set of automorphisms found by brute force.
#[derive(Clone, Debug)]
pub struct AutomorphismSet {
    pub maps: Vec<CentralMap>,
    /// Closed under composition and inverses.
    pub closed: bool,
}

impl AutomorphismSet {
    pub fn count(&self) -> usize {
        self.maps.len()
    }

    pub fn tables(&self) -> HashSet<Vec<u16>> {
        self.maps.iter().map(|m| m.images.clone()).collect()
    }
}

fn is_closed(maps: &[CentralMap], exec: Exec) -> bool {
    let set: HashSet<&[u16]> = maps.iter().map(|m| m.images.as_slice()).collect();
    if !maps.iter().any(CentralMap::is_identity) {
        return false;
    }
    let closed_products = exec.count_range(maps.len(), |i| {
        let a = &maps[i].images;
        maps.iter().all(|b| {
            let composed: Vec<u16> = b.images.iter().map(|&y| a[y as usize]).collect();
            set.contains(composed.as_slice())
        })
    });
    if closed_products != maps.len() {
        return false;
    }
    maps.iter().all(|m| {
        let mut inverse = vec![0u16; m.images.len()];
        for (x, &y) in m.images.iter().enumerate() {
            inverse[y as usize] = x as u16;
        }
        set.contains(inverse.as_slice())
    })
}

fn select(
    maps: Vec<CentralMap>,
    keep: impl Fn(&CentralMap) -> bool,
    exec: Exec,
) -> AutomorphismSet {
    let maps: Vec<CentralMap> = maps.into_iter().filter(|m| keep(m)).collect();
    let closed = is_closed(&maps, exec);
    AutomorphismSet { maps, closed }
}

/// `Autcent(G)`: the bijective central endomorphisms.
pub fn autcent_bruteforce(
    g: &Arc<FiniteGroupView>,
    config: &OracleConfig,
) -> Result<AutomorphismSet, OracleError> {
    let maps = central_endomorphisms(g, config)?;
    Ok(select(maps, |m| m.bijective, config.exec))
}

/// `Autcent_Z(G)`: central automorphisms fixing `Z(G)` pointwise.
pub fn autcentz_bruteforce(
    g: &Arc<FiniteGroupView>,
    config: &OracleConfig,
) -> Result<AutomorphismSet, OracleError> {
    let maps = central_endomorphisms(g, config)?;
    Ok(select(maps, |m| m.bijective && m.fixes_center, config.exec))
}

/// Both automorphism sets from a single enumeration.
pub fn central_automorphisms(
    g: &Arc<FiniteGroupView>,
    config: &OracleConfig,
) -> Result<(usize, AutomorphismSet, AutomorphismSet), OracleError> {
    let maps = central_endomorphisms(g, config)?;
    let endomorphisms = maps.len();
    let autcentz = select(
        maps.iter()
            .filter(|m| m.bijective && m.fixes_center)
            .cloned()
            .collect(),
        |_| true,
        config.exec,
    );
    let autcent = select(maps, |m| m.bijective, config.exec);
    Ok((endomorphisms, autcent, autcentz))
}

/// Conjugation `x -> g^-1 x g` as an image table.
pub fn conjugation_table(g: &FiniteGroupView, by: usize) -> Vec<u16> {
    (0..g.order()).map(|x| g.conjugate(x, by) as u16).collect()
}

/// `Inn(G)`, one table per coset of `Z(G)`.
pub fn inner_automorphisms(g: &Arc<FiniteGroupView>) -> HashSet<Vec<u16>> {
    (0..g.order()).map(|x| conjugation_table(g, x)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerCenterCheck {
    /// Every conjugation by an element of `Z_2(G)` is a central
    /// automorphism fixing `Z(G)`.
    pub embeds: bool,
    /// Number of distinct conjugations by elements of `Z_2(G)`.
    pub distinct: usize,
    /// `|Z_2(G) / Z(G)|`.
    pub expected: usize,
}

impl InnerCenterCheck {
    pub fn holds(&self) -> bool {
        self.embeds && self.distinct == self.expected
    }
}

/// Verifies `Z(Inn(G)) <= Autcent_Z(G)` as literal map sets.
pub fn inner_center_check(
    g: &Arc<FiniteGroupView>,
    autcentz: &AutomorphismSet,
) -> Result<InnerCenterCheck, OracleError> {
    let ucs = upper_central_series(g)?;
    let z = &ucs[1.min(ucs.len() - 1)];
    let z2: &Subgroup = ucs.get(2).unwrap_or(ucs.last().unwrap());
    let allowed = autcentz.tables();
    let conjugations: HashSet<Vec<u16>> = z2
        .members()
        .iter()
        .map(|&x| conjugation_table(g, x))
        .collect();
    Ok(InnerCenterCheck {
        embeds: conjugations.iter().all(|t| allowed.contains(t)),
        distinct: conjugations.len(),
        expected: z2.order() / z.order(),
    })
}
