use std::sync::OnceLock;

use proptest::prelude::*;

use sacts::canon::canonical_form;
use sacts::hom::enumerate_maps;
use sacts::{Act, Congruence, FiniteMonoid, Side, Universe};

fn monoids() -> &'static [FiniteMonoid] {
    static M: OnceLock<Vec<FiniteMonoid>> = OnceLock::new();
    M.get_or_init(|| FiniteMonoid::enumerate_up_to(3))
}

fn acts(i: usize, max: usize) -> Vec<Act> {
    Universe::acts_only(&monoids()[i], max, Side::Right)
}

fn pick<T: Clone>(v: &[T], k: usize) -> T {
    v[k % v.len()].clone()
}

/// The least congruence containing `pairs`, by closing a relation matrix
/// under symmetry, transitivity and the action until nothing changes.
fn brute_congruence(a: &Act, pairs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let n = a.size();
    let mut rel = vec![vec![false; n]; n];
    for (x, row) in rel.iter_mut().enumerate() {
        row[x] = true;
    }
    for &(x, y) in pairs {
        rel[x][y] = true;
        rel[y][x] = true;
    }
    loop {
        let mut next = rel.clone();
        for x in 0..n {
            for y in 0..n {
                if !rel[x][y] {
                    continue;
                }
                next[y][x] = true;
                for z in 0..n {
                    if rel[y][z] {
                        next[x][z] = true;
                    }
                }
                for s in a.monoid().elements() {
                    next[a.act(x, s)][a.act(y, s)] = true;
                }
            }
        }
        if next == rel {
            return rel;
        }
        rel = next;
    }
}

fn act_laws(m: &FiniteMonoid, side: Side, n: usize, table: &[usize]) -> bool {
    let k = m.size();
    let at = |x: usize, s: usize| table[x * k + s];
    (0..n).all(|x| at(x, m.identity()) == x)
        && (0..n).all(|x| {
            (0..k).all(|s| {
                (0..k).all(|t| match side {
                    Side::Right => at(at(x, s), t) == at(x, m.mul(s, t)),
                    Side::Left => at(at(x, t), s) == at(x, m.mul(s, t)),
                })
            })
        })
}

fn relabel(a: &Act, perm: &[usize]) -> Act {
    let k = a.monoid().size();
    let mut table = vec![0; a.size() * k];
    for x in a.elements() {
        for s in 0..k {
            table[perm[x] * k + s] = perm[a.act(x, s)];
        }
    }
    Act::new(a.monoid(), a.side(), a.size(), table).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn congruence_closure_is_least(
        mi in 0usize..10,
        ai in any::<usize>(),
        raw in prop::collection::vec((0usize..4, 0usize..4), 0..4),
    ) {
        let mi = mi % monoids().len();
        let a = pick(&acts(mi, 4), ai);
        let n = a.size();
        let pairs: Vec<(usize, usize)> = raw.iter().map(|&(x, y)| (x % n, y % n)).collect();
        let c = Congruence::generated_by(&a, &pairs);
        prop_assert!(c.validate().is_valid());
        let brute = brute_congruence(&a, &pairs);
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(c.related(x, y), brute[x][y], "{} ~ {}", x, y);
            }
        }
    }

    #[test]
    fn hom_enumeration_is_complete(mi in 0usize..10, ai in any::<usize>(), bi in any::<usize>()) {
        let mi = mi % monoids().len();
        let pool = acts(mi, 3);
        let (a, b) = (pick(&pool, ai), pick(&pool, bi));
        let found: Vec<Vec<usize>> = enumerate_maps(&a, &b).unwrap().iter().map(|f| f.values().to_vec()).collect();
        let mut brute = Vec::new();
        for code in 0..b.size().pow(a.size() as u32) {
            let mut c = code;
            let v: Vec<usize> = (0..a.size()).map(|_| { let d = c % b.size(); c /= b.size(); d }).collect();
            if a.elements().all(|x| a.monoid().elements().all(|s| v[a.act(x, s)] == b.act(v[x], s))) {
                brute.push(v);
            }
        }
        let mut sorted = found.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted.len(), found.len());
        brute.sort();
        prop_assert_eq!(sorted, brute);
    }

    #[test]
    fn act_validation_matches_laws(
        mi in 0usize..10,
        left in any::<bool>(),
        n in 1usize..4,
        raw in prop::collection::vec(0usize..3, 9),
    ) {
        let m = &monoids()[mi % monoids().len()];
        let side = if left { Side::Left } else { Side::Right };
        let table: Vec<usize> = raw.iter().take(n * m.size()).map(|&v| v % n).collect();
        prop_assume!(table.len() == n * m.size());
        let laws = act_laws(m, side, n, &table);
        prop_assert_eq!(Act::new(m, side, n, table).is_ok(), laws);
    }

    #[test]
    fn monoid_validation_matches_laws(n in 1usize..4, raw in prop::collection::vec(0usize..3, 9), e in 0usize..3) {
        let e = e % n;
        let mul: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| raw[i * n + j] % n).collect()).collect();
        let unit = (0..n).all(|x| mul[e][x] == x && mul[x][e] == x);
        let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| mul[mul[x][y]][z] == mul[x][mul[y][z]])));
        prop_assert_eq!(FiniteMonoid::new(mul, e).is_ok(), unit && assoc);
    }

    #[test]
    fn canonical_form_ignores_labels(
        mi in 0usize..10,
        ai in any::<usize>(),
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let mi = mi % monoids().len();
        let a = pick(&acts(mi, 4), ai);
        let perm: Vec<usize> = perm.into_iter().filter(|&p| p < a.size()).collect();
        let b = relabel(&a, &perm);
        let (ca, cb) = (canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        prop_assert!(ca.act == cb.act);
        prop_assert!(cb.isomorphism(&b).is_bijective());
    }
}
