//! Power-commutator presentations: parsing, collection and consistency.

mod collect;
mod consistency;
mod parse;
mod presentation;

pub use consistency::{
    check_consistency, check_consistency_with, sample_triples, ConsistencyFailure,
    ConsistencyReport, SampleSequence, DEFAULT_SAMPLE_TRIPLES, SAMPLE_SEED,
};
pub use parse::{parse_presentation, parse_presentations, ParseError, ParseErrorKind};
pub(crate) use presentation::is_prime;
pub use presentation::{GroupElement, PcPresentation, PresentationError, MAX_ENUMERATION_ORDER};
