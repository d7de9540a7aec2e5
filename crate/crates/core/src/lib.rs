//! Finite p-group engine for central automorphism audits.
//!
//! Groups enter as weighted power-commutator presentations ([`pc`]), are
//! materialized as Cayley tables ([`group`]), and are analysed with the
//! Hom-counting order formulas ([`hom`], [`analysis`]) which are checked
//! against brute-force enumeration of central automorphisms ([`oracle`]).

pub mod analysis;
pub mod corpus;
pub mod exec;
pub mod group;
pub mod hom;
pub mod oracle;
pub mod pc;
