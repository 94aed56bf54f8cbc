//! Hom-set enumeration and witness search.

mod search;
mod witness;

pub use search::{enumerate_maps, HomProblem};
pub use witness::{
    find_filler, find_isomorphism, find_map_retract, find_retraction, find_section,
    find_slice_retract, MapRetractWitness, Square,
};
pub(crate) use witness::filler_problem;

#[cfg(test)]
mod tests;
