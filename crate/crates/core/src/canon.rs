//! Isomorphism-canonical forms by exhaustive relabelling.

use itertools::Itertools;

use crate::act::Act;
use crate::error::{Error, Result};
use crate::map::ActMap;
use crate::monoid::FiniteMonoid;

/// Largest carrier for which canonical forms are computed.
pub const CANON_LIMIT: usize = 8;

/// An act's canonical relabelling.
#[derive(Debug, Clone)]
pub struct Canonical {
    /// The relabelled act; equal for isomorphic inputs.
    pub act: Act,
    /// `relabel[x]` is the new label of old element `x`.
    pub relabel: Vec<usize>,
}

impl Canonical {
    /// The isomorphism from the input act onto the canonical act.
    pub fn isomorphism(&self, from: &Act) -> ActMap {
        ActMap::from_parts(from, &self.act, self.relabel.clone()).expect("relabelling is a map")
    }
}

fn relabelled(act: &Act, perm: &[usize]) -> Vec<usize> {
    let m = act.monoid().size();
    let mut table = vec![0; act.size() * m];
    for x in act.elements() {
        for s in 0..m {
            table[perm[x] * m + s] = perm[act.act(x, s)];
        }
    }
    table
}

/// The lexicographically least action table over all relabellings.
pub fn canonical_form(act: &Act) -> Result<Canonical> {
    let n = act.size();
    if n > CANON_LIMIT {
        return Err(Error::TooLarge { size: n, limit: CANON_LIMIT });
    }
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        let table = relabelled(act, &perm);
        if best.as_ref().is_none_or(|(t, _)| table < *t) {
            best = Some((table, perm));
        }
    }
    let (table, relabel) = best.unwrap_or_default();
    let canonical = Act::from_parts(act.monoid(), act.side(), n, table, act.is_centred())?;
    Ok(Canonical { act: canonical, relabel })
}

/// Hashable canonical key; equal keys iff isomorphic (same monoid assumed).
pub fn act_key(act: &Act) -> Result<(crate::Side, usize, bool, Vec<usize>)> {
    let c = canonical_form(act)?;
    Ok((act.side(), act.size(), act.is_centred(), c.act.table().to_vec()))
}

/// Canonical key of a monoid table over relabellings that may move the identity.
pub(crate) fn monoid_key(m: &FiniteMonoid) -> (usize, Vec<usize>) {
    let n = m.size();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for perm in (0..n).permutations(n) {
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[m.mul(a, b)];
            }
        }
        let cand = (perm[m.identity()], table);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard as st;
    use crate::Side;

    #[test]
    fn isomorphic_acts_share_a_form() {
        let z = FiniteMonoid::two_element_zero();
        // {a, b} with a·z = b and {p, q} with q·z = p.
        let a = Act::right(&z, vec![vec![0, 1], vec![1, 1]]).unwrap();
        let b = Act::right(&z, vec![vec![0, 0], vec![1, 0]]).unwrap();
        assert_eq!(act_key(&a).unwrap(), act_key(&b).unwrap());
        let d2 = Act::discrete(&z, Side::Right, 2);
        assert_ne!(act_key(&a).unwrap(), act_key(&d2).unwrap());
        let c = canonical_form(&b).unwrap();
        assert!(c.isomorphism(&b).validate().is_valid());
        assert!(c.isomorphism(&b).is_bijective());
    }

    #[test]
    fn limit_enforced() {
        let triv = FiniteMonoid::trivial();
        let big = Act::discrete(&triv, Side::Right, CANON_LIMIT + 1);
        assert!(matches!(canonical_form(&big), Err(Error::TooLarge { .. })));
        assert!(canonical_form(&st::sz()).is_ok());
    }
}
