use serde::Serialize;

use crate::act::Act;
use crate::classes::{in_class, ActClass, ClassDescriptor, Decision};
use crate::constructions::{disjoint_union, ConstructionResult, Provenance};
use crate::error::{Error, Result};
use crate::hom::{enumerate_maps, HomProblem};
use crate::map::ActMap;

/// `original = right ∘ left`, with the classes each piece is claimed to lie in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub original: ActMap,
    pub left: ActMap,
    pub right: ActMap,
    pub left_class: ClassDescriptor,
    pub right_class: ClassDescriptor,
    pub left_evidence: Option<Decision>,
    pub right_evidence: Option<Decision>,
}

impl Factorization {
    /// Checks that the pieces compose to `original`.
    pub fn new(
        original: &ActMap,
        left: ActMap,
        right: ActMap,
        left_class: ClassDescriptor,
        right_class: ClassDescriptor,
    ) -> Result<Self> {
        if left.source() != original.source() || right.target() != original.target() {
            return Err(Error::Incompatible("factorization endpoints differ from the map".into()));
        }
        if right.compose(&left)?.values() != original.values() {
            return Err(Error::Incompatible("factorization does not compose to the map".into()));
        }
        Ok(Factorization {
            original: original.clone(),
            left,
            right,
            left_class,
            right_class,
            left_evidence: None,
            right_evidence: None,
        })
    }

    /// Attach class-membership decisions for both pieces.
    pub fn certify(mut self) -> Result<Self> {
        self.left_evidence = Some(in_class(&self.left, &self.left_class)?);
        self.right_evidence = Some(in_class(&self.right, &self.right_class)?);
        Ok(self)
    }

    pub fn middle(&self) -> &Act {
        self.left.target()
    }

    /// Both pieces certified and in their classes.
    pub fn certified(&self) -> bool {
        self.left_evidence.as_ref().is_some_and(|d| d.holds) && self.right_evidence.as_ref().is_some_and(|d| d.holds)
    }
}

/// `X --ι--> X ⊔ Y --f̄--> Y` with `ι` the first injection (unitary) and `f̄`
/// equal to `f` on `X` and the identity on `Y` (split by the second
/// injection).
pub fn factor_unitary_split(f: &ActMap) -> Result<Factorization> {
    let (x, y) = (f.source(), f.target());
    let (mid, offsets) = disjoint_union(&[x.clone(), y.clone()]);
    let left = ActMap::from_parts(x, &mid, x.elements().collect())?;
    let mut values = f.values().to_vec();
    values.extend(y.elements());
    let right = ActMap::from_parts(&mid, y, values)?;
    debug_assert_eq!(offsets[1], x.size());
    Factorization::new(f, left, right, ClassDescriptor::Unitary, ClassDescriptor::SplitEpi)?.certify()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precover {
    /// `P → A`.
    pub map: ActMap,
    /// One summand per `(member index, h: member → A)`, in member order
    /// and then lexicographic order of `h`.
    pub summands: Vec<(usize, ActMap)>,
    pub object: ConstructionResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecoverOutcome {
    Precover(Precover),
    /// Every hom-set from a member into the act is empty.
    Nonexistent { members: usize },
}

/// `P = ⊔ X_i` over all pairs `(X_i, h: X_i → A)`, with the induced map.
pub fn precover(a: &Act, class: &ActClass) -> Result<PrecoverOutcome> {
    let members = class
        .explicit_members()
        .ok_or_else(|| Error::Descriptor("precover needs an explicit class".into()))?;
    let mut summands = Vec::new();
    for (i, m) in members.iter().enumerate() {
        for h in enumerate_maps(m, a)? {
            summands.push((i, h));
        }
    }
    if summands.is_empty() {
        return Ok(PrecoverOutcome::Nonexistent { members: members.len() });
    }
    let parts: Vec<Act> = summands.iter().map(|(i, _)| members[*i].clone()).collect();
    let (object, offsets) = disjoint_union(&parts);
    let mut values = Vec::with_capacity(object.size());
    for (_, h) in &summands {
        values.extend_from_slice(h.values());
    }
    let map = ActMap::from_parts(&object, a, values)?;
    let legs = parts
        .iter()
        .zip(&offsets)
        .enumerate()
        .map(|(k, (p, &o))| {
            let v = (0..p.size()).map(|x| x + o).collect();
            (format!("in{k}"), ActMap::from_parts(p, &object, v).expect("injection"))
        })
        .collect();
    Ok(PrecoverOutcome::Precover(Precover {
        map,
        summands,
        object: ConstructionResult {
            object: object.clone(),
            legs,
            provenance: Provenance::Coproduct { parts },
        },
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverMode {
    Precover,
    Cover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrecoverCheck {
    pub mode: CoverMode,
    pub holds: bool,
    /// Whether the domain itself is in the class, when that is decidable.
    pub domain_in_class: Option<bool>,
    /// Member maps that were shown to factor.
    pub factored: usize,
    /// A member map that does not factor: `(member index, map)`.
    pub unfactored: Option<(usize, ActMap)>,
    /// An endomap `e` of the domain with `g∘e = g` that is not an isomorphism.
    pub non_iso_endomap: Option<ActMap>,
}

/// Whether every map from a member into the target factors through `g`,
/// and in cover mode whether every `e` with `g∘e = g` is an isomorphism.
pub fn check_precover(g: &ActMap, class: &ActClass, mode: CoverMode) -> Result<PrecoverCheck> {
    let members = class
        .explicit_members()
        .ok_or_else(|| Error::Descriptor("precover check needs an explicit class".into()))?;
    let domain_in_class = Some(class.contains(g.source())?.holds);
    let mut factored = 0;
    let mut unfactored = None;
    'outer: for (i, m) in members.iter().enumerate() {
        for h in enumerate_maps(m, g.target())? {
            if HomProblem::new(m, g.source())?.lying_over(g, h.values()).exists() {
                factored += 1;
            } else {
                unfactored = Some((i, h));
                break 'outer;
            }
        }
    }
    let mut non_iso_endomap = None;
    if mode == CoverMode::Cover && unfactored.is_none() {
        let p = g.source();
        non_iso_endomap = HomProblem::new(p, p)?
            .lying_over(g, g.values())
            .all()
            .into_iter()
            .find(|e| !e.is_bijective());
    }
    Ok(PrecoverCheck {
        mode,
        holds: unfactored.is_none() && non_iso_endomap.is_none(),
        domain_in_class,
        factored,
        unfactored,
        non_iso_endomap,
    })
}

/// `A --ι--> A ⊔ P --[f, p]--> B` for the canonical precover `p: P → B`.
///
/// The left piece is certified against `U_X` (the complement `P` is a
/// coproduct of members, so this needs the class closed under coproducts
/// unless `P` is a single member); the right piece by projectivity of every
/// member against it.
pub fn factor_via_precover(f: &ActMap, class: &ActClass) -> Result<Factorization> {
    let PrecoverOutcome::Precover(p) = precover(f.target(), class)? else {
        return Err(Error::NoPrecover);
    };
    let a = f.source();
    let (mid, _) = disjoint_union(&[a.clone(), p.map.source().clone()]);
    let left = ActMap::from_parts(a, &mid, a.elements().collect())?;
    let mut values = f.values().to_vec();
    values.extend_from_slice(p.map.values());
    let right = ActMap::from_parts(&mid, f.target(), values)?;
    let bound = mid.size().max(1);
    Factorization::new(
        f,
        left,
        right,
        ClassDescriptor::UnitaryWithComplementIn(class.clone()),
        ClassDescriptor::ProjectiveFor(class.clone(), bound),
    )?
    .certify()
}
