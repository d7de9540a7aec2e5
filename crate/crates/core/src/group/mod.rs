//! Group structure: Cayley-table views, subgroups, quotients, central
//! series, Frattini subgroup and abelian invariants.

mod abelian;
mod series;
mod subgroup;
mod view;

use thiserror::Error;

pub use abelian::{abelian_invariants, subgroup_invariants, AbelianType};
pub use series::{
    center, coclass, commutator_with_whole, derived_subgroup, frattini_and_rank, frattini_of,
    lower_central_series, minimal_generators, nilpotency_class, upper_central_series,
};
pub use subgroup::Subgroup;
pub use view::{Backing, FiniteGroupView, MAX_VIEW_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group of order {0} exceeds the supported maximum")]
    TooLarge(u64),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("order {order} is not a power of {prime}")]
    NotPGroup { order: usize, prime: u32 },
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("element set is not closed under multiplication")]
    NotClosed,
    #[error("central series does not terminate (table corrupted?)")]
    NotNilpotent,
    #[error("subgroups belong to different groups")]
    ParentMismatch,
}
