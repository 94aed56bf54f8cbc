use serde::Serialize;

use crate::error::{Error, Result};
use crate::map::ActMap;

/// The fibre `K_d = g⁻¹(d)` over a fixed point `d` of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixFiber {
    pub point: usize,
    pub fiber: Vec<usize>,
    /// Inclusion of `K_d` into the source, when `K_d` is nonempty.
    pub inclusion: Option<ActMap>,
}

/// `K_d` for every fixed point `d` of `target(g)`. Requires a left zero in
/// the monoid, which guarantees every act has a fixed point.
pub fn fix_fibers(g: &ActMap) -> Result<Vec<FixFiber>> {
    if g.source().monoid().left_zeros().is_empty() {
        return Err(Error::NoLeftZero);
    }
    let fibres = g.fibres();
    g.target()
        .fixed_points()
        .into_iter()
        .map(|d| {
            let fiber = fibres[d].clone();
            let inclusion = if fiber.is_empty() {
                None
            } else {
                Some(ActMap::inclusion(g.source(), &fiber)?)
            };
            Ok(FixFiber {
                point: d,
                fiber,
                inclusion,
            })
        })
        .collect()
}
