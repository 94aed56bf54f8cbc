//! Bounded universes: all acts up to a carrier size, up to isomorphism,
//! together with every map between them. These stand in for the proper
//! classes that the lifting and box operators quantify over.

use std::collections::{BTreeMap, HashMap};

use crate::act::{Act, Side};
use crate::canon::canonical_form;
use crate::hom::enumerate_maps;
use crate::map::ActMap;
use crate::monoid::FiniteMonoid;
use crate::par;

/// Candidate tables beyond this count are refused.
const TABLE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone)]
pub struct Universe {
    monoid: FiniteMonoid,
    side: Side,
    max_act_size: usize,
    acts: Vec<Act>,
    maps: Vec<ActMap>,
    index: HashMap<ActMap, usize>,
}

impl Universe {
    /// Every act with `1..=max_size` elements, one per isomorphism class,
    /// ordered by size and then by canonical table.
    pub fn acts_only(monoid: &FiniteMonoid, max_size: usize, side: Side) -> Vec<Act> {
        let m = monoid.size();
        let moving: Vec<usize> = monoid.non_identity().collect();
        let id = monoid.identity();
        let mut out = Vec::new();
        for k in 1..=max_size {
            let slots = k * moving.len();
            let total = (k as u64).checked_pow(slots as u32).unwrap_or(u64::MAX);
            assert!(total <= TABLE_LIMIT, "universe enumeration too large: {total} tables");
            let found: Vec<Option<Vec<usize>>> = par::map_range(total as usize, |code| {
                let mut table = vec![0; k * m];
                let mut c = code;
                for x in 0..k {
                    table[x * m + id] = x;
                    for &s in &moving {
                        table[x * m + s] = c % k;
                        c /= k;
                    }
                }
                let act = Act::from_parts(monoid, side, k, table, false).ok()?;
                if !act.validate().is_valid() {
                    return None;
                }
                Some(canonical_form(&act).ok()?.act.table().to_vec())
            });
            let unique: std::collections::BTreeSet<Vec<usize>> = found.into_iter().flatten().collect();
            out.extend(
                unique
                    .into_iter()
                    .map(|t| Act::from_parts(monoid, side, k, t, false).expect("canonical table")),
            );
        }
        out
    }

    /// The universe of acts of size `<= max_act_size` and all maps between them.
    pub fn enumerate(monoid: &FiniteMonoid, max_act_size: usize, side: Side) -> Universe {
        let acts = Self::acts_only(monoid, max_act_size, side);
        let pairs: Vec<(usize, usize)> =
            (0..acts.len()).flat_map(|i| (0..acts.len()).map(move |j| (i, j))).collect();
        let maps: Vec<ActMap> = par::map(&pairs, |&(i, j)| enumerate_maps(&acts[i], &acts[j]).expect("same monoid"))
            .into_iter()
            .flatten()
            .collect();
        let index = maps.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect();
        Universe {
            monoid: monoid.clone(),
            side,
            max_act_size,
            acts,
            maps,
            index,
        }
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn max_act_size(&self) -> usize {
        self.max_act_size
    }

    pub fn acts(&self) -> &[Act] {
        &self.acts
    }

    pub fn maps(&self) -> &[ActMap] {
        &self.maps
    }

    /// Position of `f` in [`Universe::maps`], when `f` is literally a map of this universe.
    pub fn index_of(&self, f: &ActMap) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Position of the universe's representative of `a`'s isomorphism class.
    pub fn act_index(&self, a: &Act) -> Option<usize> {
        let key = canonical_form(&a.with_centred(false)).ok()?.act;
        self.acts.iter().position(|b| *b == key)
    }

    /// Maps grouped by source act index.
    pub fn maps_by_source(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.maps.iter().enumerate() {
            let s = self.acts.iter().position(|a| a == f.source()).expect("source in universe");
            out.entry(s).or_default().push(i);
        }
        out
    }

    /// Maps grouped by target act index.
    pub fn maps_by_target(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.maps.iter().enumerate() {
            let t = self.acts.iter().position(|a| a == f.target()).expect("target in universe");
            out.entry(t).or_default().push(i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(m: &FiniteMonoid, n: usize) -> Vec<usize> {
        let acts = Universe::acts_only(m, n, Side::Right);
        (1..=n).map(|k| acts.iter().filter(|a| a.size() == k).count()).collect()
    }

    #[test]
    fn known_counts() {
        // Trivial monoid: one set per size.
        assert_eq!(counts(&FiniteMonoid::trivial(), 4), vec![1, 1, 1, 1]);
        // Z: idempotent self-maps up to conjugacy, 1, 2, 3, 5.
        assert_eq!(counts(&FiniteMonoid::two_element_zero(), 4), vec![1, 2, 3, 5]);
        // C2: involutions up to conjugacy, 1, 2, 2, 3.
        assert_eq!(counts(&FiniteMonoid::cyclic_group(2), 4), vec![1, 2, 2, 3]);
    }

    #[test]
    fn left_and_right_agree_over_commutative_monoids() {
        let z = FiniteMonoid::two_element_zero();
        assert_eq!(counts(&z, 3), {
            let l = Universe::acts_only(&z, 3, Side::Left);
            (1..=3).map(|k| l.iter().filter(|a| a.size() == k).count()).collect::<Vec<_>>()
        });
    }

    #[test]
    fn maps_are_indexed() {
        let u = Universe::enumerate(&FiniteMonoid::two_element_zero(), 2, Side::Right);
        for (i, f) in u.maps().iter().enumerate() {
            assert_eq!(u.index_of(f), Some(i));
            assert!(f.validate().is_valid());
        }
        assert_eq!(u.acts().len(), 3);
    }
}
