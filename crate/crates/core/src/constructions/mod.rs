//! Coproducts, quotients, Rees quotients, pushouts, pullbacks, finite chain
//! colimits and tensor products.
//!
//! Every quotient-like carrier is indexed densely in the order of the least
//! element of each class, so outputs are canonical for a given input.

mod chain;
mod tensor;
#[cfg(test)]
mod tests;

pub use chain::{chain_colimit, factor_through_stage, ChainColimit, ChainDiagram};
pub use tensor::{induced_map, tensor, InducedMap, TensorResult};

use std::collections::HashMap;

use crate::act::{Act, EmptinessPolicy};
use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::map::ActMap;
use crate::validate::Violation;

/// How a construction was obtained; enough to rebuild it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Coproduct { parts: Vec<Act> },
    CentredCoproduct { parts: Vec<Act> },
    Quotient { congruence: Congruence },
    Rees { map: ActMap, require_mono: bool },
    Pushout { f: ActMap, u: ActMap },
    Pullback { f: ActMap, g: ActMap },
    ChainColimit { chain: ChainDiagram },
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Coproduct { .. } => "coproduct",
            Provenance::CentredCoproduct { .. } => "centred-coproduct",
            Provenance::Quotient { .. } => "quotient",
            Provenance::Rees { .. } => "rees",
            Provenance::Pushout { .. } => "pushout",
            Provenance::Pullback { .. } => "pullback",
            Provenance::ChainColimit { .. } => "chain-colimit",
        }
    }

    /// Rebuild the construction from its inputs.
    pub fn replay(&self) -> Result<ConstructionResult> {
        match self {
            Provenance::Coproduct { parts } => coproduct(parts),
            Provenance::CentredCoproduct { parts } => centred_coproduct(parts),
            Provenance::Quotient { congruence } => quotient(congruence),
            Provenance::Rees { map, require_mono } => rees_quotient(map, *require_mono),
            Provenance::Pushout { f, u } => pushout(f, u),
            Provenance::Pullback { f, g } => match pullback(f, g, EmptinessPolicy::Permit)? {
                PullbackOutcome::Exists(r) => Ok(r),
                PullbackOutcome::Nonexistent { .. } => Err(Error::Empty("pullback")),
            },
            Provenance::ChainColimit { chain } => chain_colimit(chain).map(|c| c.result),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub object: Act,
    pub legs: Vec<(String, ActMap)>,
    pub provenance: Provenance,
}

impl ConstructionResult {
    /// The leg called `name`.
    ///
    /// # Panics
    /// If no such leg exists; leg names are fixed per construction.
    pub fn leg(&self, name: &str) -> &ActMap {
        self.legs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, m)| m)
            .unwrap_or_else(|| panic!("{} has no leg {name}", self.provenance.name()))
    }
}

fn check_same(parts: &[Act]) -> Result<()> {
    for p in &parts[1..] {
        parts[0].compatible(p)?;
    }
    Ok(())
}

/// Disjoint union without the centred-coproduct guard.
pub(crate) fn disjoint_union(parts: &[Act]) -> (Act, Vec<usize>) {
    let first = &parts[0];
    let m = first.monoid().size();
    let mut offsets = Vec::with_capacity(parts.len());
    let mut table = Vec::new();
    let mut offset = 0;
    for p in parts {
        offsets.push(offset);
        table.extend(p.table().iter().map(|&y| y + offset));
        offset += p.size();
    }
    debug_assert_eq!(table.len(), offset * m);
    let act = Act::from_parts(first.monoid(), first.side(), offset, table, false).expect("blockwise table");
    (act, offsets)
}

/// The disjoint union with injections `in0, in1, ...`.
///
/// A single part is returned unchanged. Two or more parts that all carry the
/// centred flag are refused: their disjoint union has several fixed points,
/// so [`centred_coproduct`] must be asked for explicitly.
pub fn coproduct(parts: &[Act]) -> Result<ConstructionResult> {
    if parts.is_empty() {
        return Err(Error::Empty("coproduct"));
    }
    check_same(parts)?;
    if parts.len() > 1 && parts.iter().all(Act::is_centred) {
        return Err(Error::CentredCoproductRequired);
    }
    let provenance = Provenance::Coproduct { parts: parts.to_vec() };
    if parts.len() == 1 {
        return Ok(ConstructionResult {
            object: parts[0].clone(),
            legs: vec![("in0".into(), ActMap::identity(&parts[0]))],
            provenance,
        });
    }
    let (object, offsets) = disjoint_union(parts);
    let legs = injections(parts, &object, &offsets);
    Ok(ConstructionResult { object, legs, provenance })
}

fn injections(parts: &[Act], object: &Act, offsets: &[usize]) -> Vec<(String, ActMap)> {
    parts
        .iter()
        .zip(offsets)
        .enumerate()
        .map(|(i, (p, &o))| {
            let values = (0..p.size()).map(|x| x + o).collect();
            (format!("in{i}"), ActMap::from_parts(p, object, values).expect("injection"))
        })
        .collect()
}

/// The coproduct of centred acts: the disjoint union with all base points
/// identified. Legs are `in0, in1, ...`.
pub fn centred_coproduct(parts: &[Act]) -> Result<ConstructionResult> {
    if parts.is_empty() {
        return Err(Error::Empty("centred coproduct"));
    }
    check_same(parts)?;
    let mut points = Vec::with_capacity(parts.len());
    for p in parts {
        match p.fixed_points().as_slice() {
            [x] => points.push(*x),
            fixed => return Err(Error::NotCentred { fixed: fixed.len() }),
        }
    }
    let (union, offsets) = disjoint_union(parts);
    let pairs: Vec<(usize, usize)> = (1..parts.len())
        .map(|i| (points[0] + offsets[0], points[i] + offsets[i]))
        .collect();
    let q = quotient_unchecked(&Congruence::generated_by(&union, &pairs));
    let object = q.object.with_centred(true);
    let proj = q.leg("proj").values().to_vec();
    let legs = parts
        .iter()
        .zip(&offsets)
        .enumerate()
        .map(|(i, (p, &o))| {
            let values = (0..p.size()).map(|x| proj[x + o]).collect();
            (format!("in{i}"), ActMap::from_parts(p, &object, values).expect("injection"))
        })
        .collect();
    Ok(ConstructionResult {
        object,
        legs,
        provenance: Provenance::CentredCoproduct { parts: parts.to_vec() },
    })
}

fn congruence_error(rho: &Congruence) -> Result<()> {
    if let Some(v) = rho.validate().violations.into_iter().next() {
        return Err(match v {
            Violation::Compatibility { a, b, s } => Error::NotCongruence { a, b, s },
            other => Error::Structural {
                path: "blocks".into(),
                message: other.to_string(),
            },
        });
    }
    Ok(())
}

/// `A/ρ` with the projection leg `proj`.
pub fn quotient(rho: &Congruence) -> Result<ConstructionResult> {
    congruence_error(rho)?;
    Ok(quotient_unchecked(rho))
}

fn quotient_unchecked(rho: &Congruence) -> ConstructionResult {
    let act = rho.act();
    let m = act.monoid().size();
    let index = rho.block_index();
    let reps: Vec<usize> = rho.blocks().iter().map(|b| b[0]).collect();
    let mut table = Vec::with_capacity(reps.len() * m);
    for &r in &reps {
        for s in act.monoid().elements() {
            table.push(index[act.act(r, s)]);
        }
    }
    let object = Act::from_parts(act.monoid(), act.side(), reps.len(), table, false).expect("quotient table");
    let object = keep_centred(act.is_centred(), object);
    let proj = ActMap::from_parts(act, &object, index).expect("projection");
    ConstructionResult {
        object,
        legs: vec![("proj".into(), proj)],
        provenance: Provenance::Quotient {
            congruence: rho.clone(),
        },
    }
}

fn keep_centred(flag: bool, act: Act) -> Act {
    if flag && act.fixed_points().len() == 1 {
        act.with_centred(true)
    } else {
        act
    }
}

/// The Rees quotient `Y/X` of `f: X → Y`: the image of `f` collapsed to one
/// point. The leg `proj` is the surjection `Y → Y/X`.
///
/// With `require_mono` a non-injective `f` is refused. When `X` is empty
/// (only possible under the permissive emptiness policy) a fresh fixed point
/// is adjoined, so `|Y/X| = |Y| - |im f| + 1` holds in every case.
pub fn rees_quotient(f: &ActMap, require_mono: bool) -> Result<ConstructionResult> {
    if require_mono && !f.is_injective() {
        return Err(Error::NotMono);
    }
    let y = f.target();
    let provenance = Provenance::Rees {
        map: f.clone(),
        require_mono,
    };
    let image = f.image();
    if image.is_empty() {
        let m = y.monoid().size();
        let n = y.size();
        let mut table = y.table().to_vec();
        table.extend(std::iter::repeat_n(n, m));
        let object = Act::from_parts(y.monoid(), y.side(), n + 1, table, false).expect("adjoined point");
        let proj = ActMap::from_parts(y, &object, y.elements().collect()).expect("inclusion");
        return Ok(ConstructionResult {
            object,
            legs: vec![("proj".into(), proj)],
            provenance,
        });
    }
    let pairs: Vec<(usize, usize)> = image[1..].iter().map(|&b| (image[0], b)).collect();
    let mut q = quotient_unchecked(&Congruence::generated_by(y, &pairs));
    q.provenance = provenance;
    Ok(q)
}

/// The unique `h: Y' → Z'` with `h∘p = q∘k`, where `p: Y → Y'` is onto.
///
/// This is how maps pass to quotients, e.g. `ḡ: B/A → C/A` from `g: B → C`.
pub fn descend(k: &ActMap, p: &ActMap, q: &ActMap) -> Result<ActMap> {
    if p.source() != k.source() || q.source() != k.target() {
        return Err(Error::Incompatible("descend: maps do not line up".into()));
    }
    if !p.is_surjective() {
        return Err(Error::Incompatible("descend: projection is not onto".into()));
    }
    let mut values = vec![usize::MAX; p.target().size()];
    for y in k.source().elements() {
        let want = q.apply(k.apply(y));
        let slot = &mut values[p.apply(y)];
        if *slot != usize::MAX && *slot != want {
            return Err(Error::Incompatible(format!(
                "descend: element {y} identified by the projection but not by its image"
            )));
        }
        *slot = want;
    }
    ActMap::from_parts(p.target(), q.target(), values)
}

/// `P ≅ (B ⊔ C)/ρ` for `f: A → B`, `u: A → C`, where `ρ` is generated by
/// `(f(a), u(a))`. Legs are `v: B → P` and `g: C → P`.
pub fn pushout(f: &ActMap, u: &ActMap) -> Result<ConstructionResult> {
    if f.source() != u.source() {
        return Err(Error::Incompatible("pushout: maps have different sources".into()));
    }
    let (b, c) = (f.target(), u.target());
    b.compatible(c)?;
    let (union, offsets) = disjoint_union(&[b.clone(), c.clone()]);
    let pairs: Vec<(usize, usize)> = f
        .source()
        .elements()
        .map(|a| (f.apply(a), u.apply(a) + offsets[1]))
        .collect();
    let q = quotient_unchecked(&Congruence::generated_by(&union, &pairs));
    let object = keep_centred(b.is_centred() && c.is_centred(), q.object.clone());
    let proj = q.leg("proj").values();
    let v = ActMap::from_parts(b, &object, proj[..b.size()].to_vec())?;
    let g = ActMap::from_parts(c, &object, proj[b.size()..].to_vec())?;
    Ok(ConstructionResult {
        object,
        legs: vec![("v".into(), v), ("g".into(), g)],
        provenance: Provenance::Pushout {
            f: f.clone(),
            u: u.clone(),
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PullbackOutcome {
    Exists(ConstructionResult),
    /// No pair `(b, c)` has `f(b) = g(c)`, and empty acts are not permitted.
    Nonexistent { f_image: Vec<usize>, g_image: Vec<usize> },
}

/// `{(b, c) : f(b) = g(c)}` in lexicographic order with the componentwise
/// action and projection legs `p1`, `p2`.
pub fn pullback(f: &ActMap, g: &ActMap, policy: EmptinessPolicy) -> Result<PullbackOutcome> {
    if f.target() != g.target() {
        return Err(Error::Incompatible("pullback: maps have different targets".into()));
    }
    let (b, c) = (f.source(), g.source());
    let pairs: Vec<(usize, usize)> = b
        .elements()
        .flat_map(|x| c.elements().filter(move |&y| f.apply(x) == g.apply(y)).map(move |y| (x, y)))
        .collect();
    if pairs.is_empty() && policy == EmptinessPolicy::Reject {
        return Ok(PullbackOutcome::Nonexistent {
            f_image: f.image(),
            g_image: g.image(),
        });
    }
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut table = Vec::with_capacity(pairs.len() * b.monoid().size());
    for &(x, y) in &pairs {
        for s in b.monoid().elements() {
            table.push(index[&(b.act(x, s), c.act(y, s))]);
        }
    }
    let object = Act::from_parts(b.monoid(), b.side(), pairs.len(), table, false)?;
    let p1 = ActMap::from_parts(&object, b, pairs.iter().map(|p| p.0).collect())?;
    let p2 = ActMap::from_parts(&object, c, pairs.iter().map(|p| p.1).collect())?;
    Ok(PullbackOutcome::Exists(ConstructionResult {
        object,
        legs: vec![("p1".into(), p1), ("p2".into(), p2)],
        provenance: Provenance::Pullback {
            f: f.clone(),
            g: g.clone(),
        },
    }))
}
