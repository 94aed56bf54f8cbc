//! Bounded flatness, stability and purity.
//!
//! Each predicate quantifies over all acts or maps up to a declared size, so
//! a positive verdict means "up to the bound", never the unbounded property.

use serde::Serialize;

use crate::act::{Act, Side};
use crate::constructions::{tensor, InducedMap, TensorResult};
use crate::error::{Error, Result};
use crate::hom::HomProblem;
use crate::map::ActMap;
use crate::monoid::FiniteMonoid;
use crate::universe::Universe;

fn check_bound(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidBound)
    } else {
        Ok(())
    }
}

/// The tensor product of `A` with one left inclusion `X ⊆ Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub ambient: Act,
    pub subact: Vec<usize>,
    pub injective: bool,
    /// Two pairs `(a, x)` with `x` in the subact (ambient numbering), in
    /// different classes of `A ⊗ X` but the same class of `A ⊗ Y`.
    pub collision: Option<((usize, usize), (usize, usize))>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlatnessReport {
    pub holds: bool,
    pub bound: usize,
    pub checked: Vec<InclusionCheck>,
}

/// Every subact inclusion of left acts of size at most `bound`; every left
/// monomorphism of that size is isomorphic to one of them.
#[derive(Debug, Clone)]
pub struct FlatnessProbe {
    bound: usize,
    inclusions: Vec<ActMap>,
}

impl FlatnessProbe {
    pub fn new(monoid: &FiniteMonoid, bound: usize) -> Result<Self> {
        check_bound(bound)?;
        let mut inclusions = Vec::new();
        for y in Universe::acts_only(monoid, bound, Side::Left) {
            for sub in y.subacts() {
                inclusions.push(ActMap::inclusion(&y, &sub)?);
            }
        }
        Ok(FlatnessProbe { bound, inclusions })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn inclusions(&self) -> &[ActMap] {
        &self.inclusions
    }

    fn induced(a: &Act, g: &ActMap) -> Result<InducedMap> {
        InducedMap::between(&tensor(a, g.source())?, &tensor(a, g.target())?, g)
    }

    pub fn check(&self, a: &Act) -> Result<FlatnessReport> {
        let mut checked = Vec::with_capacity(self.inclusions.len());
        let mut holds = true;
        for g in &self.inclusions {
            let ind = Self::induced(a, g)?;
            let collision = ind.collision().map(|(c1, c2)| {
                let pick = |c: usize| {
                    let (p, x) = ind.domain.classes()[c][0];
                    (p, g.apply(x))
                };
                (pick(c1), pick(c2))
            });
            holds &= collision.is_none();
            checked.push(InclusionCheck {
                ambient: g.target().clone(),
                subact: g.values().to_vec(),
                injective: collision.is_none(),
                collision,
            });
        }
        Ok(FlatnessReport {
            holds,
            bound: self.bound,
            checked,
        })
    }

    /// Stops at the first collision.
    pub fn is_flat(&self, a: &Act) -> Result<bool> {
        for g in &self.inclusions {
            if !Self::induced(a, g)?.is_injective() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Whether `A ⊗ -` preserves every left monomorphism into acts of size at
/// most `bound`.
pub fn is_flat_bounded(a: &Act, bound: usize) -> Result<FlatnessReport> {
    if a.side() != Side::Right {
        return Err(Error::SideMismatch {
            expected: Side::Right.as_str(),
            found: a.side().as_str(),
        });
    }
    FlatnessProbe::new(a.monoid(), bound)?.check(a)
}

/// A tensor equality `b ⊗ g(x) = f(a) ⊗ y` in `B ⊗ Y` that cannot be
/// rewritten as `f(a') ⊗ g(x')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityWitness {
    pub source: Act,
    pub target: Act,
    pub map: ActMap,
    pub b: usize,
    pub x: usize,
    pub a: usize,
    pub y: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub holds: bool,
    pub bound: usize,
    pub maps_checked: usize,
    pub failure: Option<StabilityWitness>,
}

/// Every left map between acts of size at most `bound`.
#[derive(Debug, Clone)]
pub struct StabilityProbe {
    bound: usize,
    targets: Vec<Act>,
    /// Maps grouped by the index of their target in `targets`.
    maps: Vec<Vec<ActMap>>,
}

impl StabilityProbe {
    pub fn new(monoid: &FiniteMonoid, bound: usize) -> Result<Self> {
        check_bound(bound)?;
        let u = Universe::enumerate(monoid, bound, Side::Left);
        let targets = u.acts().to_vec();
        let mut maps = vec![Vec::new(); targets.len()];
        for (t, idx) in u.maps_by_target() {
            maps[t] = idx.iter().map(|&i| u.maps()[i].clone()).collect();
        }
        Ok(StabilityProbe { bound, targets, maps })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn check(&self, f: &ActMap) -> Result<StabilityReport> {
        if f.source().side() != Side::Right {
            return Err(Error::SideMismatch {
                expected: Side::Right.as_str(),
                found: f.source().side().as_str(),
            });
        }
        if !f.is_injective() {
            return Err(Error::NotMono);
        }
        let b_act = f.target();
        let mut count = 0;
        for (y_act, maps) in self.targets.iter().zip(&self.maps) {
            let t = tensor(b_act, y_act)?;
            // Classes containing some f(a) ⊗ y.
            let mut in_image = vec![false; t.num_classes()];
            for a in f.source().elements() {
                for y in y_act.elements() {
                    in_image[t.class(f.apply(a), y)] = true;
                }
            }
            for g in maps {
                count += 1;
                if let Some(w) = unstable_class(f, g, &t, &in_image) {
                    return Ok(StabilityReport {
                        holds: false,
                        bound: self.bound,
                        maps_checked: count,
                        failure: Some(w),
                    });
                }
            }
        }
        Ok(StabilityReport {
            holds: true,
            bound: self.bound,
            maps_checked: count,
            failure: None,
        })
    }
}

fn unstable_class(f: &ActMap, g: &ActMap, t: &TensorResult, in_image: &[bool]) -> Option<StabilityWitness> {
    let mut through = vec![false; t.num_classes()];
    for a in f.source().elements() {
        for x in g.source().elements() {
            through[t.class(f.apply(a), g.apply(x))] = true;
        }
    }
    for b in f.target().elements() {
        for x in g.source().elements() {
            let c = t.class(b, g.apply(x));
            if in_image[c] && !through[c] {
                let (a, y) = f
                    .source()
                    .elements()
                    .flat_map(|a| g.target().elements().map(move |y| (a, y)))
                    .find(|&(a, y)| t.class(f.apply(a), y) == c)
                    .expect("class is in the image");
                return Some(StabilityWitness {
                    source: g.source().clone(),
                    target: g.target().clone(),
                    map: g.clone(),
                    b,
                    x,
                    a,
                    y,
                });
            }
        }
    }
    None
}

/// Whether the right monomorphism `f` is stable against every left map
/// between acts of size at most `bound`.
pub fn is_stable_bounded(f: &ActMap, bound: usize) -> Result<StabilityReport> {
    StabilityProbe::new(f.source().monoid(), bound)?.check(f)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PurityReport {
    pub holds: bool,
    pub bound: usize,
    pub maps_checked: usize,
    /// An act `M` and a map `M → target(f)` that does not lift.
    pub failing: Option<(Act, ActMap)>,
}

/// Whether every map from an act of size at most `bound` into the target of
/// `f` lifts through `f`.
pub fn is_pure_epi_bounded(f: &ActMap, bound: usize) -> Result<PurityReport> {
    check_bound(bound)?;
    let acts = Universe::acts_only(f.source().monoid(), bound, f.source().side());
    pure_against(f, &acts, bound)
}

pub(crate) fn pure_against(f: &ActMap, acts: &[Act], bound: usize) -> Result<PurityReport> {
    let mut count = 0;
    for m in acts {
        for g in HomProblem::new(m, f.target())?.all() {
            count += 1;
            if !HomProblem::new(m, f.source())?.lying_over(f, g.values()).exists() {
                return Ok(PurityReport {
                    holds: false,
                    bound,
                    maps_checked: count,
                    failing: Some((m.clone(), g)),
                });
            }
        }
    }
    Ok(PurityReport {
        holds: true,
        bound,
        maps_checked: count,
        failing: None,
    })
}
