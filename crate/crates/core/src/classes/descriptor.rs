use serde::Serialize;

use crate::act::Act;
use crate::constructions::rees_quotient;
use crate::error::{Error, Result};
use crate::map::ActMap;

use super::acts::{ActClass, Membership};
use super::flat::{is_flat_bounded, is_pure_epi_bounded, FlatnessReport, PurityReport};
use super::lifting::{has_lifting, is_projective_wrt, LiftSide, LiftingReport, ProjectivityReport};
use super::maps::{centred_complement, classify_map, complement, MapClassification};

/// A finite description of a class of maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassDescriptor {
    Mono,
    /// Epimorphisms (`E`).
    Epi,
    SplitEpi,
    SplitMono,
    Unitary,
    /// Unitary monomorphisms whose complement lies in the class (`U_X`).
    UnitaryWithComplementIn(ActClass),
    /// Maps through which every act of size at most the bound lifts (`PE`).
    PureEpiBounded(usize),
    /// Monomorphisms whose Rees quotient is flat up to the bound (`F-mono`).
    FlatReesMonoBounded(usize),
    ExplicitList(Vec<ActMap>),
    RlpAgainst(Vec<ActMap>),
    LlpAgainst(Vec<ActMap>),
    /// Centred analogue of `U_X`: the complement together with the base
    /// point is a subact in the class.
    CentredUnitaryWithComplementIn(ActClass),
    /// Maps against which every member of the class is projective (`R_X`);
    /// non-explicit classes are sampled up to the given size.
    ProjectiveFor(ActClass, usize),
}

impl ClassDescriptor {
    pub fn name(&self) -> &'static str {
        match self {
            ClassDescriptor::Mono => "mono",
            ClassDescriptor::Epi => "epi",
            ClassDescriptor::SplitEpi => "split-epi",
            ClassDescriptor::SplitMono => "split-mono",
            ClassDescriptor::Unitary => "unitary",
            ClassDescriptor::UnitaryWithComplementIn(_) => "unitary-complement-in",
            ClassDescriptor::PureEpiBounded(_) => "pure-epi",
            ClassDescriptor::FlatReesMonoBounded(_) => "flat-rees-mono",
            ClassDescriptor::ExplicitList(_) => "explicit",
            ClassDescriptor::RlpAgainst(_) => "rlp",
            ClassDescriptor::LlpAgainst(_) => "llp",
            ClassDescriptor::CentredUnitaryWithComplementIn(_) => "centred-unitary-complement-in",
            ClassDescriptor::ProjectiveFor(..) => "projective-for",
        }
    }

    /// Parameter checks: bounds at least one.
    pub fn validate(&self) -> Result<()> {
        match self {
            ClassDescriptor::PureEpiBounded(0)
            | ClassDescriptor::FlatReesMonoBounded(0)
            | ClassDescriptor::ProjectiveFor(_, 0) => Err(Error::InvalidBound),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    Classification(MapClassification),
    Complement {
        complement: Option<Act>,
        elements: Vec<usize>,
        membership: Option<Membership>,
    },
    Purity(PurityReport),
    Flatness {
        rees_quotient: Option<Act>,
        report: Option<FlatnessReport>,
    },
    Listed {
        index: Option<usize>,
    },
    Lifting(LiftingReport),
    Projectivity {
        member: usize,
        report: ProjectivityReport,
        checked_members: usize,
    },
}

/// A class-membership verdict with its certificate or counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub holds: bool,
    /// The bound the verdict depends on; `None` for an exact verdict.
    pub bound: Option<usize>,
    pub evidence: Evidence,
}

impl Decision {
    fn exact(holds: bool, evidence: Evidence) -> Self {
        Decision {
            holds,
            bound: None,
            evidence,
        }
    }

    /// A positive verdict that only holds up to a bound.
    pub fn is_bounded(&self) -> bool {
        self.bound.is_some()
    }
}

pub fn in_class(f: &ActMap, class: &ClassDescriptor) -> Result<Decision> {
    class.validate()?;
    let flags = || Evidence::Classification(classify_map(f));
    Ok(match class {
        ClassDescriptor::Mono => Decision::exact(f.is_injective(), flags()),
        ClassDescriptor::Epi => Decision::exact(f.is_surjective(), flags()),
        ClassDescriptor::SplitEpi => Decision::exact(classify_map(f).split_epi, flags()),
        ClassDescriptor::SplitMono => Decision::exact(classify_map(f).split_mono, flags()),
        ClassDescriptor::Unitary => Decision::exact(classify_map(f).unitary, flags()),
        ClassDescriptor::UnitaryWithComplementIn(x) => complement_decision(x, complement(f))?,
        ClassDescriptor::CentredUnitaryWithComplementIn(x) => complement_decision(x, centred_complement(f))?,
        ClassDescriptor::PureEpiBounded(n) => {
            let report = is_pure_epi_bounded(f, *n)?;
            Decision {
                holds: report.holds,
                bound: Some(*n),
                evidence: Evidence::Purity(report),
            }
        }
        ClassDescriptor::FlatReesMonoBounded(n) => {
            if !f.is_injective() {
                Decision::exact(
                    false,
                    Evidence::Flatness {
                        rees_quotient: None,
                        report: None,
                    },
                )
            } else {
                let r = rees_quotient(f, true)?;
                let report = is_flat_bounded(&r.object, *n)?;
                Decision {
                    holds: report.holds,
                    bound: Some(*n),
                    evidence: Evidence::Flatness {
                        rees_quotient: Some(r.object),
                        report: Some(report),
                    },
                }
            }
        }
        ClassDescriptor::ExplicitList(list) => {
            let index = list.iter().position(|g| g == f);
            Decision::exact(index.is_some(), Evidence::Listed { index })
        }
        ClassDescriptor::RlpAgainst(list) => {
            let report = has_lifting(LiftSide::Right, f, list)?;
            Decision::exact(report.holds, Evidence::Lifting(report))
        }
        ClassDescriptor::LlpAgainst(list) => {
            let report = has_lifting(LiftSide::Left, f, list)?;
            Decision::exact(report.holds, Evidence::Lifting(report))
        }
        ClassDescriptor::ProjectiveFor(x, n) => {
            let members = x.members_up_to(f.source().monoid(), f.source().side(), *n)?;
            let bound = if x.is_explicit() { None } else { Some(*n) };
            let mut last = None;
            for (i, p) in members.iter().enumerate() {
                let report = is_projective_wrt(p, f)?;
                if !report.holds {
                    return Ok(Decision::exact(
                        false,
                        Evidence::Projectivity {
                            member: i,
                            report,
                            checked_members: i + 1,
                        },
                    ));
                }
                last = Some((i, report));
            }
            let (member, report) = last.unwrap_or((
                0,
                ProjectivityReport {
                    holds: true,
                    lifts: Vec::new(),
                    failing: None,
                },
            ));
            Decision {
                holds: true,
                bound,
                evidence: Evidence::Projectivity {
                    member,
                    report,
                    checked_members: members.len(),
                },
            }
        }
    })
}

fn complement_decision(x: &ActClass, inclusion: Option<ActMap>) -> Result<Decision> {
    let Some(inc) = inclusion else {
        return Ok(Decision::exact(
            false,
            Evidence::Complement {
                complement: None,
                elements: Vec::new(),
                membership: None,
            },
        ));
    };
    let comp = inc.source().clone();
    // An empty complement (f an isomorphism) is the empty coproduct.
    let membership = if comp.is_empty() {
        Membership {
            holds: true,
            bound: None,
            reason: "empty complement".into(),
        }
    } else {
        x.contains(&comp)?
    };
    Ok(Decision {
        holds: membership.holds,
        bound: if membership.holds { membership.bound } else { None },
        evidence: Evidence::Complement {
            complement: Some(comp),
            elements: inc.values().to_vec(),
            membership: Some(membership),
        },
    })
}
