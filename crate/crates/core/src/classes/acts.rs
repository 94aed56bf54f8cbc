use serde::Serialize;

use crate::act::{Act, Side};
use crate::error::Result;
use crate::hom::{find_isomorphism, find_retraction, HomProblem};
use crate::map::ActMap;
use crate::monoid::FiniteMonoid;
use crate::universe::Universe;

use super::flat::FlatnessProbe;
use super::lifting::projective_wrt;

/// Closure properties assumed of an explicit class when testing membership.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Closure {
    pub coproducts: bool,
    pub summands: bool,
    pub retracts: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActClassKind {
    /// Finitely many acts up to isomorphism.
    Explicit(Vec<Act>),
    /// Acts that are flat up to the bound.
    FlatBounded(usize),
    /// Acts projective with respect to every epimorphism between acts of
    /// size at most the bound.
    ProjectiveBounded(usize),
    /// All acts of size at most the bound. Over a finite monoid every finite
    /// act is finitely presented, so this stands in for the finitely
    /// presented acts.
    FpBounded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActClass {
    pub kind: ActClassKind,
    pub closure: Closure,
    /// Decide `ProjectiveBounded` membership exactly instead: an act is
    /// projective iff each indecomposable component is isomorphic to `eS`
    /// for an idempotent `e`. This is the standard characterisation from the
    /// literature, not a bounded check.
    pub exact_projective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub holds: bool,
    /// The bound a positive verdict depends on, if any.
    pub bound: Option<usize>,
    pub reason: String,
}

impl Membership {
    fn exact(holds: bool, reason: impl Into<String>) -> Self {
        Membership {
            holds,
            bound: None,
            reason: reason.into(),
        }
    }

    fn bounded(holds: bool, bound: usize, reason: impl Into<String>) -> Self {
        Membership {
            holds,
            bound: Some(bound),
            reason: reason.into(),
        }
    }
}

fn same_up_to_iso(a: &Act, b: &Act) -> bool {
    a.size() == b.size() && find_isomorphism(a, b).ok().flatten().is_some()
}

impl ActClass {
    /// An explicit class, deduplicated up to isomorphism.
    pub fn explicit(members: Vec<Act>, closure: Closure) -> Result<Self> {
        let mut kept: Vec<Act> = Vec::new();
        for m in members {
            if let Some(first) = kept.first() {
                first.compatible(&m)?;
            }
            if !kept.iter().any(|k| same_up_to_iso(k, &m)) {
                kept.push(m);
            }
        }
        Ok(ActClass {
            kind: ActClassKind::Explicit(kept),
            closure,
            exact_projective: false,
        })
    }

    pub fn of_kind(kind: ActClassKind) -> Self {
        ActClass {
            kind,
            closure: Closure::default(),
            exact_projective: false,
        }
    }

    pub fn is_explicit(&self) -> bool {
        matches!(self.kind, ActClassKind::Explicit(_))
    }

    pub fn explicit_members(&self) -> Option<&[Act]> {
        match &self.kind {
            ActClassKind::Explicit(m) => Some(m),
            _ => None,
        }
    }

    /// Members of size at most `n` in the universe of `monoid` (for explicit
    /// classes, the listed members regardless of `n`).
    pub fn members_up_to(&self, monoid: &FiniteMonoid, side: Side, n: usize) -> Result<Vec<Act>> {
        if let ActClassKind::Explicit(m) = &self.kind {
            return Ok(m.clone());
        }
        let mut out = Vec::new();
        for a in Universe::acts_only(monoid, n, side) {
            if self.contains(&a)?.holds {
                out.push(a);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, a: &Act) -> Result<Membership> {
        match &self.kind {
            ActClassKind::Explicit(members) => Ok(self.contains_explicit(members, a)),
            ActClassKind::FlatBounded(n) => {
                let flat = FlatnessProbe::new(a.monoid(), *n)?.is_flat(a)?;
                Ok(Membership::bounded(flat, *n, "flat up to the bound"))
            }
            ActClassKind::ProjectiveBounded(_) if self.exact_projective => Ok(Membership::exact(
                    is_projective_exact(a)?,
                "components isomorphic to eS for idempotents e",
            )),
            ActClassKind::ProjectiveBounded(n) => {
                let u = Universe::enumerate(a.monoid(), *n, a.side());
                let holds = u.maps().iter().filter(|f| f.is_surjective()).all(|f| projective_wrt(a, f));
                Ok(Membership::bounded(holds, *n, "projective w.r.t. epimorphisms up to the bound"))
            }
            ActClassKind::FpBounded(n) => Ok(Membership::bounded(
                a.size() <= *n,
                *n,
                "finite act of size at most the bound",
            )),
        }
    }

    fn contains_explicit(&self, members: &[Act], a: &Act) -> Membership {
        if members.iter().any(|m| same_up_to_iso(m, a)) {
            return Membership::exact(true, "isomorphic to a listed member");
        }
        let comps = components(a);
        let member_comps: Vec<Vec<Act>> = members.iter().map(components).collect();
        if self.closure.coproducts && split_into_members(&comps, members, &member_comps) {
            return Membership::exact(true, "coproduct of listed members");
        }
        if self.closure.summands {
            if self.closure.coproducts {
                let all: Vec<&Act> = member_comps.iter().flatten().collect();
                if comps.iter().all(|c| all.iter().any(|m| same_up_to_iso(m, c))) {
                    return Membership::exact(true, "summand of a coproduct of listed members");
                }
            } else if member_comps.iter().any(|mc| sub_multiset(&comps, mc)) {
                return Membership::exact(true, "direct summand of a listed member");
            }
        }
        if self.closure.retracts {
            for m in members {
                let Ok(p) = HomProblem::new(a, m) else { continue };
                let mut found = false;
                p.injective().for_each(|v| {
                    let i = ActMap::from_parts(a, m, v.to_vec()).expect("search output");
                    found = find_retraction(&i).is_some();
                    if found {
                        std::ops::ControlFlow::Break(())
                    } else {
                        std::ops::ControlFlow::Continue(())
                    }
                });
                if found {
                    return Membership::exact(true, "retract of a listed member");
                }
            }
        }
        Membership::exact(false, "not obtained from the listed members")
    }
}

/// Coproduct summands: connected components, or for a centred act the
/// wedge summands (each a class of non-base elements glued to the base).
fn components(a: &Act) -> Vec<Act> {
    if let (true, [base]) = (a.is_centred(), &a.fixed_points()[..]) {
        return wedge_summands(a, *base);
    }
    a.components()
        .iter()
        .map(|c| ActMap::inclusion(a, c).expect("components are subacts").source().clone())
        .collect()
}

fn wedge_summands(a: &Act, base: usize) -> Vec<Act> {
    let mut parent: Vec<usize> = a.elements().collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for x in a.elements().filter(|&x| x != base) {
        for s in a.monoid().elements() {
            let y = a.act(x, s);
            if y != base {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx.max(ry)] = rx.min(ry);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in a.elements().filter(|&x| x != base) {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups
        .into_values()
        .map(|mut g| {
            g.push(base);
            let i = ActMap::inclusion(a, &g).expect("a wedge summand is closed");
            i.source().with_centred(true)
        })
        .collect()
}

fn sub_multiset(parts: &[Act], pool: &[Act]) -> bool {
    let mut used = vec![false; pool.len()];
    parts.iter().all(|p| {
        match (0..pool.len()).find(|&i| !used[i] && same_up_to_iso(&pool[i], p)) {
            Some(i) => {
                used[i] = true;
                true
            }
            None => false,
        }
    })
}

/// Whether `comps` can be grouped so that each group's coproduct is a member.
fn split_into_members(comps: &[Act], members: &[Act], member_comps: &[Vec<Act>]) -> bool {
    fn go(remaining: &[Act], member_comps: &[Vec<Act>]) -> bool {
        let Some(first) = remaining.first() else { return true };
        for mc in member_comps {
            // A member's components must match a sub-multiset of what is left
            // containing `first`.
            if !mc.iter().any(|c| same_up_to_iso(c, first)) {
                continue;
            }
            let mut rest: Vec<Act> = remaining.to_vec();
            let mut ok = true;
            for c in mc {
                match rest.iter().position(|r| same_up_to_iso(r, c)) {
                    Some(i) => {
                        rest.remove(i);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && go(&rest, member_comps) {
                return true;
            }
        }
        false
    }
    !members.is_empty() && go(comps, member_comps)
}

/// Exact projectivity: every indecomposable component is isomorphic to `eS`
/// (or `Se` for left acts) for an idempotent `e`.
pub fn is_projective_exact(a: &Act) -> Result<bool> {
    let m = a.monoid();
    let mut cyclic = Vec::new();
    for e in m.idempotents() {
        let elems: Vec<usize> = m.elements().map(|s| match a.side() {
            Side::Right => m.mul(e, s),
            Side::Left => m.mul(s, e),
        }).collect();
        let regular = Act::regular(m, a.side());
        cyclic.push(ActMap::inclusion(&regular, &elems)?.source().clone());
    }
    if a.is_empty() {
        return Ok(true);
    }
    Ok(components(a).iter().all(|c| cyclic.iter().any(|p| same_up_to_iso(p, c))))
}
