//! Brute-force ground truth: explicit central endomorphisms and
//! automorphisms, the inner-center embedding, and the direct-factor search
//! deciding whether a group is purely non-abelian.

mod central;
mod purity;

use thiserror::Error;

pub use central::{
    autcent_bruteforce, autcentz_bruteforce, central_automorphisms, central_endomorphisms,
    conjugation_table, inner_automorphisms, inner_center_check, AutomorphismSet, CentralMap,
    InnerCenterCheck,
};
pub use purity::{
    direct_factor_search, maximal_subgroups, omega1_center_in_frattini, PurityVerdict,
};

use crate::exec::Exec;
use crate::group::GroupError;
use crate::hom::HomError;

pub const DEFAULT_HOM_BUDGET: u128 = 10_000;
pub const DEFAULT_SUBGROUP_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug)]
pub struct OracleConfig {
    /// Largest `|Hom(G/G', Z(G))|` the oracle will enumerate.
    pub hom_budget: u128,
    /// Largest number of subgroups the direct-factor search may visit.
    pub subgroup_budget: usize,
    pub exec: Exec,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            hom_budget: DEFAULT_HOM_BUDGET,
            subgroup_budget: DEFAULT_SUBGROUP_BUDGET,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("the oracle requires a non-abelian group")]
    Abelian,
    #[error("{required} candidate maps exceed the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
}
