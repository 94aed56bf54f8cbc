//! Structured witnesses: fillers, sections, retractions, isomorphisms and
//! map retracts. Every search returns the lexicographically least witness.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::act::Act;
use crate::error::{Error, Result};
use crate::hom::search::HomProblem;
use crate::map::ActMap;

/// A commuting square
///
/// ```text
///   A --u--> C
///   |        |
///   f        g
///   v        v
///   B --v--> D
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Square {
    pub f: ActMap,
    pub g: ActMap,
    pub u: ActMap,
    pub v: ActMap,
}

impl Square {
    /// Checks shapes and that `g∘u = v∘f`.
    pub fn new(f: ActMap, g: ActMap, u: ActMap, v: ActMap) -> Result<Self> {
        if u.source() != f.source() || u.target() != g.source() || v.source() != f.target() || v.target() != g.target() {
            return Err(Error::Incompatible("square edges do not line up".into()));
        }
        if g.compose(&u)?.values() != v.compose(&f)?.values() {
            return Err(Error::NotCommuting);
        }
        Ok(Square { f, g, u, v })
    }

    /// Whether `h: B → C` satisfies `h∘f = u` and `g∘h = v`.
    pub fn is_filler(&self, h: &ActMap) -> bool {
        h.source() == self.f.target()
            && h.target() == self.g.source()
            && self.f.source().elements().all(|a| h.apply(self.f.apply(a)) == self.u.apply(a))
            && self.f.target().elements().all(|b| self.g.apply(h.apply(b)) == self.v.apply(b))
    }
}

/// `h∘f = u` and `g∘h = v` as a search problem over `h: B → C`.
pub(crate) fn filler_problem(f: &ActMap, g: &ActMap, u: &[usize], v: &[usize]) -> Result<HomProblem> {
    let mut p = HomProblem::new(f.target(), g.source())?.lying_over(g, v);
    for (a, &b) in f.values().iter().enumerate() {
        p = p.fix(b, u[a]);
    }
    Ok(p)
}

/// The least diagonal filler of a commuting square, if any.
pub fn find_filler(sq: &Square) -> Result<Option<ActMap>> {
    Ok(filler_problem(&sq.f, &sq.g, sq.u.values(), sq.v.values())?.first())
}

/// The least `s` with `g∘s = 1`.
pub fn find_section(g: &ActMap) -> Option<ActMap> {
    if !g.is_surjective() {
        return None;
    }
    let id: Vec<usize> = g.target().elements().collect();
    HomProblem::new(g.target(), g.source())
        .expect("same monoid")
        .lying_over(g, &id)
        .first()
}

/// The least `r` with `r∘f = 1`.
pub fn find_retraction(f: &ActMap) -> Option<ActMap> {
    if !f.is_injective() {
        return None;
    }
    let mut p = HomProblem::new(f.target(), f.source()).expect("same monoid");
    for (a, &b) in f.values().iter().enumerate() {
        p = p.fix(b, a);
    }
    p.first()
}

/// The least isomorphism `a → b`, if the acts are isomorphic.
pub fn find_isomorphism(a: &Act, b: &Act) -> Result<Option<ActMap>> {
    a.compatible(b)?;
    if a.size() != b.size() {
        return Ok(None);
    }
    Ok(HomProblem::new(a, b)?.injective().first())
}

/// `g: A → C` is a retract of `f: A → B` under `A`:
/// `β∘α = 1_C`, `α∘g = f`, `β∘f = g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MapRetractWitness {
    pub alpha: ActMap,
    pub beta: ActMap,
}

impl MapRetractWitness {
    pub fn verify(&self, f: &ActMap, g: &ActMap) -> bool {
        let ok = || -> Result<bool> {
            Ok(self.beta.compose(&self.alpha)?.is_identity()
                && self.alpha.compose(g)?.values() == f.values()
                && self.beta.compose(f)?.values() == g.values())
        };
        ok().unwrap_or(false)
    }

    /// Equations for the slice version: `β∘α = 1_C`, `f∘α = g`, `g∘β = f`.
    pub fn verify_slice(&self, f: &ActMap, g: &ActMap) -> bool {
        let ok = || -> Result<bool> {
            Ok(self.beta.compose(&self.alpha)?.is_identity()
                && f.compose(&self.alpha)?.values() == g.values()
                && g.compose(&self.beta)?.values() == f.values())
        };
        ok().unwrap_or(false)
    }
}

impl Serialize for MapRetractWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("MapRetractWitness", 2)?;
        st.serialize_field("alpha", self.alpha.values())?;
        st.serialize_field("beta", self.beta.values())?;
        st.end()
    }
}

/// The least `(α, β)` exhibiting `g: A → C` as a retract of `f: A → B`.
pub fn find_map_retract(f: &ActMap, g: &ActMap) -> Result<Option<MapRetractWitness>> {
    if f.source() != g.source() {
        return Err(Error::Incompatible("map retract needs a shared source".into()));
    }
    // α∘g = f fixes α on im g.
    let mut alpha_problem = HomProblem::new(g.target(), f.target())?;
    for (a, &c) in g.values().iter().enumerate() {
        alpha_problem = alpha_problem.fix(c, f.apply(a));
    }
    let mut found = None;
    alpha_problem.for_each(|alpha| {
        let mut beta = match HomProblem::new(f.target(), g.target()) {
            Ok(p) => p,
            Err(_) => return ControlFlow::Break(()),
        };
        for (c, &b) in alpha.iter().enumerate() {
            beta = beta.fix(b, c);
        }
        for (a, &b) in f.values().iter().enumerate() {
            beta = beta.fix(b, g.apply(a));
        }
        match beta.first() {
            Some(beta) => {
                found = Some((alpha.to_vec(), beta));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(found.map(|(alpha, beta)| MapRetractWitness {
        alpha: ActMap::from_parts(g.target(), f.target(), alpha).expect("alpha"),
        beta,
    }))
}

/// The least `(α, β)` exhibiting `g: C → Y` as a retract of `f: B → Y`
/// over `Y`: `α: C → B`, `β: B → C`, `β∘α = 1`, `f∘α = g`, `g∘β = f`.
pub fn find_slice_retract(f: &ActMap, g: &ActMap) -> Result<Option<MapRetractWitness>> {
    if f.target() != g.target() {
        return Err(Error::Incompatible("slice retract needs a shared target".into()));
    }
    let alpha_problem = HomProblem::new(g.source(), f.source())?.lying_over(f, g.values());
    let mut found = None;
    alpha_problem.for_each(|alpha| {
        let mut beta = match HomProblem::new(f.source(), g.source()) {
            Ok(p) => p.lying_over(g, f.values()),
            Err(_) => return ControlFlow::Break(()),
        };
        for (c, &b) in alpha.iter().enumerate() {
            beta = beta.fix(b, c);
        }
        match beta.first() {
            Some(beta) => {
                found = Some((alpha.to_vec(), beta));
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(found.map(|(alpha, beta)| MapRetractWitness {
        alpha: ActMap::from_parts(g.source(), f.source(), alpha).expect("alpha"),
        beta,
    }))
}
