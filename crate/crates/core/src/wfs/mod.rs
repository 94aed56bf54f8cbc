//! Factorizations, precovers and covers, weak factorization system checks,
//! the bounded small object argument, and the centred-act variants.

mod centred;
mod cof;
mod factor;
mod soa;
#[cfg(test)]
mod tests;
mod verify;

pub use centred::{centred, centred_wfs_precover, factor_centred_precover, zero_map, CentredPrecover};
pub use cof::{cof_certificate, CofCertificate, PushoutStep};
pub use factor::{
    check_precover, factor_unitary_split, factor_via_precover, precover, CoverMode, Factorization, Precover,
    PrecoverCheck, PrecoverOutcome,
};
pub use soa::{small_object_factorize, Cap, SoaCheck, SoaConfig, SoaResult, SoaStage, SoaSquare, SoaStart, SoaStatus};
pub use verify::{wfs_verify, Factorizer, WfsReport, WfsViolation};
