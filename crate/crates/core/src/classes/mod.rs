//! Map classes and act classes: exact where the objects are finite, bounded
//! where a definition quantifies over all acts or all maps.

mod acts;
mod descriptor;
mod fix;
mod flat;
mod lifting;
mod maps;
#[cfg(test)]
mod tests;

pub use acts::{is_projective_exact, ActClass, ActClassKind, Closure, Membership};
pub use descriptor::{in_class, ClassDescriptor, Decision, Evidence};
pub use fix::{fix_fibers, FixFiber};
pub use flat::{
    is_flat_bounded, is_pure_epi_bounded, is_stable_bounded, FlatnessProbe, FlatnessReport, InclusionCheck,
    PurityReport, StabilityProbe, StabilityReport, StabilityWitness,
};
pub use lifting::{
    failing_square, has_lifting, is_projective_wrt, lifts, relative_box, squares, triangle, LiftRecord, LiftSide,
    LiftingReport, LiftingTable, ProjectivityReport, TriangleReport,
};
pub use maps::{centred_complement, classify_map, complement, is_unitary, MapClassification};

use crate::act::Act;
use crate::monoid::FiniteMonoid;

/// `max(|S|, largest input size) + 1`, so at least one strictly larger
/// object is examined.
pub fn default_bound(monoid: &FiniteMonoid, acts: &[&Act]) -> usize {
    acts.iter().map(|a| a.size()).max().unwrap_or(0).max(monoid.size()) + 1
}
