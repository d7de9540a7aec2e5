use std::sync::Arc;

use super::AnalysisError;
use crate::group::{
    abelian_invariants, center, derived_subgroup, frattini_and_rank, lower_central_series,
    minimal_generators, subgroup_invariants, upper_central_series, AbelianType, FiniteGroupView,
};

/// The structural numbers every formula and check is computed from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupInvariants {
    pub name: String,
    pub prime: u32,
    pub log_order: u32,
    pub order: usize,
    pub abelian: bool,
    pub class: usize,
    pub coclass: usize,
    /// `d(G) = log_p |G : Φ(G)|`.
    pub rank: usize,
    pub frattini_order: usize,
    pub center_type: AbelianType,
    pub center_generators: Vec<String>,
    pub derived_order: usize,
    pub derived_generators: Vec<String>,
    pub derived_abelian: bool,
    pub center_meet_derived: usize,
    /// `|G'Z(G)|`.
    pub derived_center_order: usize,
    /// Type of `G / G'Z(G)`.
    pub derived_center_quotient: AbelianType,
    /// Type of `G / G'`.
    pub abelianization: AbelianType,
    pub second_center_order: usize,
    pub center_in_derived: bool,
    pub derived_equals_center: bool,
}

impl GroupInvariants {
    pub fn compute(g: &Arc<FiniteGroupView>) -> Result<Self, AnalysisError> {
        let lcs = lower_central_series(g)?;
        let ucs = upper_central_series(g)?;
        let class = lcs.len() - 1;
        let z = center(g);
        let d = derived_subgroup(g);
        let (phi, rank) = frattini_and_rank(g);
        let meet = z.intersection(&d)?;
        let dz = d.product(&z)?;
        let abelianization = abelian_invariants(&g.quotient(&d)?)?;
        let derived_center_quotient = abelian_invariants(&g.quotient(&dz)?)?;
        let labels = |gens: Vec<usize>| gens.into_iter().map(|x| g.label(x)).collect();
        Ok(GroupInvariants {
            name: g.name().to_string(),
            prime: g.prime(),
            log_order: g.log_order(),
            order: g.order(),
            abelian: g.is_abelian(),
            class,
            coclass: g.log_order() as usize - class,
            rank,
            frattini_order: phi.order(),
            center_type: subgroup_invariants(&z)?,
            center_generators: labels(minimal_generators(&z)),
            derived_order: d.order(),
            derived_generators: labels(minimal_generators(&d)),
            derived_abelian: d.is_abelian(),
            center_meet_derived: meet.order(),
            derived_center_order: dz.order(),
            derived_center_quotient,
            abelianization,
            second_center_order: ucs.get(2).unwrap_or(ucs.last().unwrap()).order(),
            center_in_derived: z.is_subset_of(&d),
            derived_equals_center: z == d,
        })
    }

    pub fn center_order(&self) -> usize {
        self.center_type.order() as usize
    }

    /// `|Z_2(G) / Z(G)|`, the order of `Z(Inn(G))`.
    pub fn z_inn(&self) -> usize {
        self.second_center_order / self.center_order()
    }

    /// `|Inn(G)| = |G / Z(G)|`.
    pub fn inn(&self) -> usize {
        self.order / self.center_order()
    }

    pub fn p_power(&self, k: u32) -> usize {
        (self.prime as usize).pow(k)
    }
}
