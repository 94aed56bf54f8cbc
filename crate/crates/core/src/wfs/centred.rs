//! Centred acts: acts over a monoid with zero that have exactly one fixed
//! point. Coproducts here identify the base points, and the zero act `0` is
//! the one-element act.

use serde::Serialize;

use crate::act::Act;
use crate::classes::{in_class, ActClass, ClassDescriptor, Decision};
use crate::constructions::centred_coproduct;
use crate::error::{Error, Result};
use crate::hom::{enumerate_maps, find_filler, Square};
use crate::map::ActMap;

use super::factor::Factorization;
use super::verify::Factorizer;

/// The act with its centred flag set, after checking the hypotheses.
pub fn centred(a: &Act) -> Result<Act> {
    if a.monoid().zero().is_none() {
        return Err(Error::NoZero);
    }
    match a.fixed_points().len() {
        1 => Ok(a.with_centred(true)),
        n => Err(Error::NotCentred { fixed: n }),
    }
}

/// The unique map `0 → A` onto the base point.
pub fn zero_map(a: &Act) -> Result<ActMap> {
    let a = centred(a)?;
    let zero = Act::terminal(a.monoid(), a.side()).with_centred(true);
    ActMap::new(&zero, &a, a.fixed_points())
}

/// `A --in0--> A ∨ P --[f, p]--> B`, where `P` is the wedge of one copy of a
/// member per map member → B.
pub fn factor_centred_precover(f: &ActMap, class: &ActClass) -> Result<Factorization> {
    let members = class
        .explicit_members()
        .ok_or_else(|| Error::Descriptor("centred precover needs an explicit class".into()))?;
    let a = centred(f.source())?;
    let b = centred(f.target())?;
    let mut parts = vec![a.clone()];
    let mut maps = vec![f.values().to_vec()];
    for m in members {
        let m = centred(m)?;
        for h in enumerate_maps(&m, &b)? {
            parts.push(m.clone());
            maps.push(h.values().to_vec());
        }
    }
    let wedge = centred_coproduct(&parts)?;
    let mid = wedge.object.clone();
    let mut values = vec![usize::MAX; mid.size()];
    for (k, v) in maps.iter().enumerate() {
        let leg = wedge.leg(&format!("in{k}"));
        for (x, &y) in v.iter().enumerate() {
            values[leg.apply(x)] = y;
        }
    }
    let left = ActMap::from_parts(&a, &mid, wedge.leg("in0").values().to_vec())?;
    let right = ActMap::from_parts(&mid, &b, values)?;
    let f = ActMap::from_parts(&a, &b, f.values().to_vec())?;
    Factorization::new(
        &f,
        left,
        right,
        ClassDescriptor::CentredUnitaryWithComplementIn(class.clone()),
        ClassDescriptor::ProjectiveFor(class.clone(), mid.size().max(1)),
    )?
    .certify()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentredPrecover {
    /// `A*`, the middle object of `0 → A* → A`.
    pub a_star: Act,
    pub left: ActMap,
    pub right: ActMap,
    pub left_decision: Decision,
    pub right_decision: Decision,
    /// `(x, h)` with `x: X → A` and `h: X → A*` a filler, `right∘h = x`.
    pub fillers: Vec<(ActMap, ActMap)>,
    /// A map `X → A` with no filler.
    pub unfilled: Option<ActMap>,
    /// No map from the probe into `A`: only the factorization is reported.
    pub degenerate: bool,
    pub holds: bool,
}

/// Factor `0 → A` as `0 → A* → A` and show every map from the probe into
/// `A` factors through `A* → A` by a diagonal filler.
pub fn centred_wfs_precover(
    a: &Act,
    left: &ClassDescriptor,
    right: &ClassDescriptor,
    factorizer: &Factorizer<'_>,
    probe: &Act,
) -> Result<CentredPrecover> {
    let a = centred(a)?;
    let probe = centred(probe)?;
    let zero_a = zero_map(&a)?;
    let fz = factorizer(&zero_a)?;
    let left_decision = in_class(&fz.left, left)?;
    let right_decision = in_class(&fz.right, right)?;
    let zero_x = zero_map(&probe)?;
    let mut fillers = Vec::new();
    let mut unfilled = None;
    let maps = enumerate_maps(&probe, &a)?;
    for x in &maps {
        let x = ActMap::from_parts(&probe, fz.right.target(), x.values().to_vec())?;
        let z = ActMap::from_parts(zero_x.source(), fz.left.source(), vec![0])?;
        let top = fz.left.compose(&z)?;
        let sq = Square::new(zero_x.clone(), fz.right.clone(), top, x.clone())?;
        match find_filler(&sq)? {
            Some(h) => fillers.push((x, h)),
            None => {
                unfilled = Some(x);
                break;
            }
        }
    }
    let holds = left_decision.holds && right_decision.holds && unfilled.is_none();
    Ok(CentredPrecover {
        a_star: fz.middle().clone(),
        left: fz.left,
        right: fz.right,
        left_decision,
        right_decision,
        fillers,
        unfilled,
        degenerate: maps.is_empty(),
        holds,
    })
}
