use crate::act::Act;
use crate::error::{Error, Result};
use crate::hom::HomProblem;
use crate::map::ActMap;

use super::{ConstructionResult, Provenance};

/// A finite chain `A_0 → A_1 → … → A_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainDiagram {
    acts: Vec<Act>,
    maps: Vec<ActMap>,
}

impl ChainDiagram {
    pub fn new(acts: Vec<Act>, maps: Vec<ActMap>) -> Result<Self> {
        if acts.is_empty() {
            return Err(Error::Empty("chain"));
        }
        if maps.len() + 1 != acts.len() {
            return Err(Error::Incompatible(format!(
                "chain of {} acts needs {} maps, got {}",
                acts.len(),
                acts.len() - 1,
                maps.len()
            )));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.source() != &acts[i] || f.target() != &acts[i + 1] {
                return Err(Error::Incompatible(format!("chain map {i} does not join stage {i} to {}", i + 1)));
            }
        }
        Ok(ChainDiagram { acts, maps })
    }

    /// The chain spelled out by consecutive maps.
    pub fn from_maps(maps: Vec<ActMap>) -> Result<Self> {
        let Some(first) = maps.first() else {
            return Err(Error::Empty("chain"));
        };
        let mut acts = vec![first.source().clone()];
        acts.extend(maps.iter().map(|f| f.target().clone()));
        Self::new(acts, maps)
    }

    pub fn single(act: &Act) -> Self {
        ChainDiagram {
            acts: vec![act.clone()],
            maps: Vec::new(),
        }
    }

    pub fn acts(&self) -> &[Act] {
        &self.acts
    }

    pub fn maps(&self) -> &[ActMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.acts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.acts.is_empty()
    }

    /// The composite `A_i → A_j` for `i <= j`.
    pub fn composite(&self, i: usize, j: usize) -> ActMap {
        assert!(i <= j && j < self.acts.len(), "stages out of order");
        let mut out = ActMap::identity(&self.acts[i]);
        for f in &self.maps[i..j] {
            out = f.compose(&out).expect("chain maps compose");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainColimit {
    /// Legs `leg0 … legn`, the composites into the last stage.
    pub result: ConstructionResult,
    /// For each element of the colimit, the least stage whose leg hits it.
    pub first_hit: Vec<usize>,
}

/// The colimit of a finite chain is its last stage.
pub fn chain_colimit(chain: &ChainDiagram) -> Result<ChainColimit> {
    let n = chain.len() - 1;
    let object = chain.acts[n].clone();
    let legs: Vec<(String, ActMap)> = (0..=n).map(|i| (format!("leg{i}"), chain.composite(i, n))).collect();
    let mut first_hit = vec![n; object.size()];
    for (i, (_, leg)) in legs.iter().enumerate().rev() {
        for y in leg.image() {
            first_hit[y] = i;
        }
    }
    Ok(ChainColimit {
        result: ConstructionResult {
            object,
            legs,
            provenance: Provenance::ChainColimit { chain: chain.clone() },
        },
        first_hit,
    })
}

/// The least stage `δ` and least `h': A → A_δ` with `leg_δ ∘ h' = h`, for
/// `h` into the colimit.
pub fn factor_through_stage(chain: &ChainDiagram, h: &ActMap) -> Result<Option<(usize, ActMap)>> {
    let n = chain.len() - 1;
    if h.target() != &chain.acts[n] {
        return Err(Error::Incompatible("map does not land in the colimit".into()));
    }
    for d in 0..=n {
        let leg = chain.composite(d, n);
        if let Some(found) = HomProblem::new(h.source(), &chain.acts[d])?.lying_over(&leg, h.values()).first() {
            return Ok(Some((d, found)));
        }
    }
    Ok(None)
}
