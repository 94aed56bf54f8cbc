//! Certificates that a map is a retract of a finite composite of pushouts of
//! coproducts of generators.

use serde::Serialize;

use crate::act::Act;
use crate::error::{Error, Result};
use crate::hom::{find_map_retract, HomProblem, MapRetractWitness};
use crate::map::ActMap;

use super::soa::{attach, small_object_factorize, SoaConfig, SoaResult, SoaStart};

/// One pushout of a coproduct of generators, attached along `attaching`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PushoutStep {
    pub generators: Vec<usize>,
    /// The attaching map restricted to each summand, in order.
    pub attaching: Vec<ActMap>,
    /// The resulting map out of the current object.
    pub step: ActMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CofCertificate {
    pub source: Act,
    pub steps: Vec<PushoutStep>,
    pub composite: ActMap,
    /// Exhibits the certified map as a retract of `composite` under the
    /// shared source. `None` when the map is `composite` itself.
    pub retract: Option<MapRetractWitness>,
}

impl CofCertificate {
    /// Rebuild the composite from the recorded steps.
    pub fn replay(&self, gens: &[ActMap]) -> Result<ActMap> {
        let mut composite = ActMap::identity(&self.source);
        for s in &self.steps {
            let chosen: Vec<(usize, &[usize])> = s
                .generators
                .iter()
                .zip(&s.attaching)
                .map(|(&i, u)| (i, u.values()))
                .collect();
            for (&i, u) in s.generators.iter().zip(&s.attaching) {
                if i >= gens.len() || u.source() != gens[i].source() || u.target() != composite.target() {
                    return Err(Error::Incompatible("certificate step does not attach".into()));
                }
            }
            let (step, _, _) = attach(composite.target(), gens, &chosen)?;
            if step != s.step {
                return Err(Error::Incompatible("replayed step differs from the stored one".into()));
            }
            composite = step.compose(&composite)?;
        }
        Ok(composite)
    }

    /// Replays and checks the retract equations against `f`.
    pub fn verify(&self, f: &ActMap, gens: &[ActMap]) -> bool {
        let Ok(composite) = self.replay(gens) else { return false };
        if composite != self.composite || f.source() != &self.source {
            return false;
        }
        match &self.retract {
            Some(w) => w.verify(&composite, f),
            None => composite == *f,
        }
    }
}

impl SoaResult {
    /// `θ` as a composite of the recorded pushout steps.
    pub fn cof_certificate(&self) -> CofCertificate {
        CofCertificate {
            source: self.original.source().clone(),
            steps: self
                .stages
                .iter()
                .map(|s| PushoutStep {
                    generators: s.squares.iter().map(|q| q.generator).collect(),
                    attaching: s.squares.iter().map(|q| q.u.clone()).collect(),
                    step: s.theta_step.clone(),
                })
                .collect(),
            composite: self.theta.clone(),
            retract: None,
        }
    }

    /// Certificate for the prefix `θ_k = ψ_{0,k}`.
    fn prefix_certificate(&self, k: usize) -> CofCertificate {
        let mut c = self.cof_certificate();
        c.steps.truncate(k);
        c.composite = self.psi(0, k);
        c
    }
}

fn single_step(f: &ActMap, gens: &[ActMap], i: usize, u: ActMap) -> Result<CofCertificate> {
    let (step, _, _) = attach(f.source(), gens, &[(i, u.values())])?;
    Ok(CofCertificate {
        source: f.source().clone(),
        steps: vec![PushoutStep {
            generators: vec![i],
            attaching: vec![u],
            step: step.clone(),
        }],
        composite: step,
        retract: None,
    })
}

fn with_retract(mut cert: CofCertificate, f: &ActMap) -> Result<Option<CofCertificate>> {
    if cert.composite == *f {
        return Ok(Some(cert));
    }
    Ok(find_map_retract(&cert.composite, f)?.map(|w| {
        cert.retract = Some(w);
        cert
    }))
}

/// Search for a certificate that `f` is a retract of a composite of at most
/// `max_len` pushouts of coproducts of generators. Sound, not complete:
/// `None` means nothing was found within the cap.
///
/// Tried in order: `f` is a generator; `f` is one pushout of one generator;
/// prefixes of the small object argument applied to `f`.
pub fn cof_certificate(f: &ActMap, gens: &[ActMap], max_len: usize) -> Result<Option<CofCertificate>> {
    if max_len == 0 {
        return Err(Error::InvalidBound);
    }
    if let Some(i) = gens.iter().position(|c| c == f) {
        let cert = single_step(f, gens, i, ActMap::identity(f.source()))?;
        return with_retract(cert, f);
    }
    // A single pushout isomorphic to `f` under the source is preferred; a
    // proper retract of one is kept as a fallback.
    let mut fallback = None;
    for (i, c) in gens.iter().enumerate() {
        for u in HomProblem::new(c.source(), f.source())?.all() {
            if let Some(cert) = with_retract(single_step(f, gens, i, u)?, f)? {
                if cert.retract.as_ref().is_none_or(|w| w.alpha.is_bijective()) {
                    return Ok(Some(cert));
                }
                fallback.get_or_insert(cert);
            }
        }
    }
    let soa = small_object_factorize(
        f,
        gens,
        SoaConfig {
            max_steps: max_len,
            start: SoaStart::PushoutFirst,
            ..SoaConfig::default()
        },
    )?;
    for k in 0..=soa.steps() {
        if let Some(cert) = with_retract(soa.prefix_certificate(k), f)? {
            return Ok(Some(cert));
        }
    }
    Ok(fallback)
}
