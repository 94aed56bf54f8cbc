//! The small object argument, iterated finitely.
//!
//! Each step collects every commuting square from a generator into the
//! current right map `φ`, pushes the coproduct of the generators out along
//! the induced attaching map, and extends `φ` over the new object. The
//! iteration stops as soon as `φ` has the right lifting property against
//! the generators, or at a cap.

use serde::Serialize;

use crate::act::Act;
use crate::classes::{has_lifting, squares, LiftSide, LiftingReport};
use crate::constructions::{disjoint_union, pushout};
use crate::error::{Error, Result};
use crate::map::ActMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SoaStart {
    /// Check the lifting property before the first step, so a map that
    /// already lifts finishes in zero steps.
    CheckFirst,
    /// Always form the first pushout when any square exists, as in the
    /// transfinite construction.
    PushoutFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SoaConfig {
    pub max_steps: usize,
    pub max_size: usize,
    pub start: SoaStart,
}

impl Default for SoaConfig {
    fn default() -> Self {
        SoaConfig {
            max_steps: 8,
            max_size: 512,
            start: SoaStart::CheckFirst,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SoaStatus {
    Completed,
    CapReached,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Cap {
    Steps,
    Size,
}

/// A square used in a step: generator `c: A → B`, `u: A → P_{k-1}`,
/// `v: B → Y`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoaSquare {
    pub generator: usize,
    pub u: ActMap,
    pub v: ActMap,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoaStage {
    pub object: Act,
    /// `P_{k-1} → P_k`.
    pub theta_step: ActMap,
    /// `P_k → Y`.
    pub phi: ActMap,
    pub squares: Vec<SoaSquare>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SoaResult {
    pub original: ActMap,
    pub stages: Vec<SoaStage>,
    /// `X → P_last`.
    pub theta: ActMap,
    /// `P_last → Y`.
    pub phi: ActMap,
    pub status: SoaStatus,
    pub cap: Option<Cap>,
    /// Fillers for every square against the generators, when completed.
    pub rlp_certificate: Option<LiftingReport>,
}

/// One pushout step: the coproduct of the generators of `squares` pushed
/// out along the attaching map into `current`. Returns the new object's
/// step map and the leg from the coproduct of codomains.
pub(crate) fn attach(
    current: &Act,
    gens: &[ActMap],
    chosen: &[(usize, &[usize])],
) -> Result<(ActMap, ActMap, ActMap)> {
    let domains: Vec<Act> = chosen.iter().map(|(i, _)| gens[*i].source().clone()).collect();
    let codomains: Vec<Act> = chosen.iter().map(|(i, _)| gens[*i].target().clone()).collect();
    let (a, a_off) = disjoint_union(&domains);
    let (b, b_off) = disjoint_union(&codomains);
    let mut c_values = vec![0; a.size()];
    let mut u_values = vec![0; a.size()];
    for (k, (i, u)) in chosen.iter().enumerate() {
        let g = &gens[*i];
        for x in g.source().elements() {
            c_values[a_off[k] + x] = b_off[k] + g.apply(x);
            u_values[a_off[k] + x] = u[x];
        }
    }
    let c = ActMap::from_parts(&a, &b, c_values)?;
    let u = ActMap::from_parts(&a, current, u_values)?;
    let p = pushout(&c, &u)?;
    Ok((p.leg("g").clone(), p.leg("v").clone(), u))
}

fn check_gens(g: &ActMap, gens: &[ActMap]) -> Result<()> {
    if gens.is_empty() {
        return Err(Error::Empty("generators"));
    }
    for c in gens {
        g.source().compatible(c.source())?;
    }
    Ok(())
}

/// Factor `g = φ ∘ θ` with `θ` a finite composite of pushouts of coproducts
/// of generators.
pub fn small_object_factorize(g: &ActMap, gens: &[ActMap], config: SoaConfig) -> Result<SoaResult> {
    check_gens(g, gens)?;
    if config.max_steps == 0 || config.max_size == 0 {
        return Err(Error::InvalidBound);
    }
    let mut stages: Vec<SoaStage> = Vec::new();
    let mut theta = ActMap::identity(g.source());
    let mut phi = g.clone();
    loop {
        let first = stages.is_empty();
        if !(first && config.start == SoaStart::PushoutFirst) {
            let report = has_lifting(LiftSide::Right, &phi, gens)?;
            if report.holds {
                return Ok(done(g, stages, theta, phi, SoaStatus::Completed, None, Some(report)));
            }
        }
        if stages.len() == config.max_steps {
            return Ok(done(g, stages, theta, phi, SoaStatus::CapReached, Some(Cap::Steps), None));
        }
        let mut found = Vec::new();
        for (i, c) in gens.iter().enumerate() {
            for (u, v) in squares(c, &phi)? {
                found.push(SoaSquare { generator: i, u, v });
            }
        }
        if found.is_empty() {
            // No squares: the lifting property holds vacuously.
            let report = has_lifting(LiftSide::Right, &phi, gens)?;
            return Ok(done(g, stages, theta, phi, SoaStatus::Completed, None, Some(report)));
        }
        let chosen: Vec<(usize, &[usize])> = found.iter().map(|s| (s.generator, s.u.values())).collect();
        let (step, leg, _) = attach(phi.source(), gens, &chosen)?;
        let next = step.target().clone();
        if next.size() > config.max_size {
            return Ok(done(g, stages, theta, phi, SoaStatus::CapReached, Some(Cap::Size), None));
        }
        // φ' agrees with φ on the old object and with each v on its summand.
        let mut values = vec![usize::MAX; next.size()];
        for p in phi.source().elements() {
            values[step.apply(p)] = phi.apply(p);
        }
        let mut offset = 0;
        for s in &found {
            for b in s.v.source().elements() {
                let slot = &mut values[leg.apply(offset + b)];
                debug_assert!(*slot == usize::MAX || *slot == s.v.apply(b), "φ well defined");
                *slot = s.v.apply(b);
            }
            offset += s.v.source().size();
        }
        let next_phi = ActMap::from_parts(&next, g.target(), values)?;
        theta = step.compose(&theta)?;
        phi = next_phi.clone();
        stages.push(SoaStage {
            object: next,
            theta_step: step,
            phi: next_phi,
            squares: found,
        });
    }
}

fn done(
    g: &ActMap,
    stages: Vec<SoaStage>,
    theta: ActMap,
    phi: ActMap,
    status: SoaStatus,
    cap: Option<Cap>,
    rlp_certificate: Option<LiftingReport>,
) -> SoaResult {
    SoaResult {
        original: g.clone(),
        stages,
        theta,
        phi,
        status,
        cap,
        rlp_certificate,
    }
}

/// Results of re-checking an [`SoaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SoaCheck {
    pub composes: bool,
    pub replays: bool,
    pub stages_commute: bool,
    pub rlp_verified: Option<bool>,
}

impl SoaCheck {
    pub fn ok(&self) -> bool {
        self.composes && self.replays && self.stages_commute && self.rlp_verified != Some(false)
    }
}

impl SoaResult {
    pub fn steps(&self) -> usize {
        self.stages.len()
    }

    /// `ψ_{i,j}: P_i → P_j` from the stored step maps (`P_0` is the source).
    pub fn psi(&self, i: usize, j: usize) -> ActMap {
        assert!(i <= j && j <= self.stages.len(), "stages out of order");
        let start = if i == 0 {
            self.original.source()
        } else {
            &self.stages[i - 1].object
        };
        let mut out = ActMap::identity(start);
        for s in &self.stages[i..j] {
            out = s.theta_step.compose(&out).expect("steps compose");
        }
        out
    }

    /// Rebuild every stage from its stored squares.
    pub fn replay(&self, gens: &[ActMap]) -> Result<ActMap> {
        let mut theta = ActMap::identity(self.original.source());
        let mut current = self.original.source().clone();
        for s in &self.stages {
            let chosen: Vec<(usize, &[usize])> = s.squares.iter().map(|q| (q.generator, q.u.values())).collect();
            let (step, _, _) = attach(&current, gens, &chosen)?;
            if step != s.theta_step {
                return Err(Error::Incompatible("replayed step differs from the stored one".into()));
            }
            theta = step.compose(&theta)?;
            current = step.target().clone();
        }
        Ok(theta)
    }

    pub fn verify(&self, gens: &[ActMap]) -> Result<SoaCheck> {
        let composes = self.phi.compose(&self.theta)?.values() == self.original.values();
        let replays = self.replay(gens).map(|t| t == self.theta).unwrap_or(false);
        let n = self.stages.len();
        let mut stages_commute = self.psi(0, n) == self.theta;
        for i in 0..=n {
            for j in i..=n {
                for k in j..=n {
                    stages_commute &= self.psi(j, k).compose(&self.psi(i, j))? == self.psi(i, k);
                }
                let phi_j = if j == 0 { &self.original } else { &self.stages[j - 1].phi };
                let phi_i = if i == 0 { &self.original } else { &self.stages[i - 1].phi };
                stages_commute &= phi_j.compose(&self.psi(i, j))?.values() == phi_i.values();
            }
        }
        let rlp_verified = match self.status {
            SoaStatus::Completed => Some(has_lifting(LiftSide::Right, &self.phi, gens)?.holds),
            SoaStatus::CapReached => None,
        };
        Ok(SoaCheck {
            composes,
            replays,
            stages_commute,
            rlp_verified,
        })
    }
}
