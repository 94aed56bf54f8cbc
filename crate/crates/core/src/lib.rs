//! Finite monoids, finite acts over them, and the lifting-property machinery
//! of weak factorization systems, decided exactly where the objects are
//! finite and against declared bounds where a statement quantifies over all
//! acts.
//!
//! The crate is organised bottom-up:
//!
//! * [`monoid`], [`act`], [`map`], [`congruence`]: the value types, with
//!   validation reports that name a witness for every broken law.
//! * [`constructions`]: coproducts, quotients, Rees quotients, pushouts,
//!   pullbacks, finite chain colimits and tensor products.
//! * [`hom`]: hom-set enumeration and witness search (fillers, sections,
//!   retractions, isomorphisms, map retracts).
//! * [`classes`]: map and act classes, bounded flatness, stability, purity,
//!   projectivity, lifting properties and relative box operators.
//! * [`wfs`]: factorizations, precovers, weak factorization system checks,
//!   the bounded small object argument and cofibration certificates.
//!
//! Hot loops go through [`par`], which uses rayon when the `parallel`
//! feature is enabled and plain iterators otherwise. Outputs are identical
//! either way.

pub mod act;
pub mod canon;
pub mod classes;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod hom;
pub mod map;
pub mod monoid;
pub mod par;
pub mod standard;
mod uf;
pub mod universe;
pub mod validate;
pub mod wfs;

pub use act::{Act, EmptinessPolicy, Side};
pub use congruence::Congruence;
pub use error::{Error, Result};
pub use map::ActMap;
pub use monoid::FiniteMonoid;
pub use universe::Universe;
pub use validate::{ValidationReport, Violation};
