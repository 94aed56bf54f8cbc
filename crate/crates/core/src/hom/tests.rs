use super::*;
use crate::act::{Act, Side};
use crate::map::ActMap;
use crate::monoid::FiniteMonoid;
use crate::standard as st;
use crate::universe::Universe;

/// Every function `a → b`, filtered by equivariance; no propagation.
fn brute_force_maps(a: &Act, b: &Act) -> Vec<Vec<usize>> {
    let n = a.size();
    let m = b.size();
    let total = m.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut values = vec![0; n];
        let mut c = code;
        for slot in values.iter_mut().rev() {
            *slot = c % m;
            c /= m;
        }
        if ActMap::from_parts(a, b, values.clone()).unwrap().validate().is_valid() {
            out.push(values);
        }
    }
    out
}

fn values(maps: &[ActMap]) -> Vec<Vec<usize>> {
    maps.iter().map(|m| m.values().to_vec()).collect()
}

#[test]
fn enumerate_examples() {
    let sz = st::sz();
    let theta = st::theta(sz.monoid());
    assert_eq!(values(&enumerate_maps(&sz, &sz).unwrap()), vec![vec![0, 1], vec![1, 1]]);
    assert_eq!(values(&enumerate_maps(&theta, &sz).unwrap()), vec![vec![1]]);
    let a2 = st::a2();
    assert_eq!(values(&enumerate_maps(&a2, &a2).unwrap()), vec![vec![0, 1], vec![1, 1]]);
}

#[test]
fn enumerate_is_complete_and_ordered() {
    for m in FiniteMonoid::enumerate_up_to(3) {
        let u = Universe::acts_only(&m, 3, Side::Right);
        for a in &u {
            for b in &u {
                let found = values(&enumerate_maps(a, b).unwrap());
                assert_eq!(found, brute_force_maps(a, b), "{a:?} -> {b:?}");
            }
        }
    }
}

#[test]
fn free_act_hom_count() {
    for m in FiniteMonoid::enumerate_up_to(3) {
        let s = Act::regular(&m, Side::Right);
        for a in Universe::acts_only(&m, 3, Side::Right) {
            assert_eq!(enumerate_maps(&s, &a).unwrap().len(), a.size());
        }
    }
}

#[test]
fn filler_examples() {
    let a = st::a2();
    let id = ActMap::identity(&a);
    let sq = Square::new(id.clone(), id.clone(), id.clone(), id.clone()).unwrap();
    assert_eq!(find_filler(&sq).unwrap(), Some(id));

    // Over C2: f = C2 → C2 ⊔ T, g = C2 → T, u = 1, v unique. No filler.
    let c2 = st::c2();
    let reg = st::c2_regular();
    let t = Act::terminal(&c2, Side::Right);
    let cop = Act::right(&c2, vec![vec![0, 1], vec![1, 0], vec![2, 2]]).unwrap();
    let f = ActMap::new(&reg, &cop, vec![0, 1]).unwrap();
    let g = ActMap::new(&reg, &t, vec![0, 0]).unwrap();
    let u = ActMap::identity(&reg);
    let v = ActMap::new(&cop, &t, vec![0, 0, 0]).unwrap();
    let sq = Square::new(f, g, u, v).unwrap();
    assert_eq!(find_filler(&sq).unwrap(), None);
    assert!(enumerate_maps(&t, &reg).unwrap().is_empty());
}

#[test]
fn non_commuting_square_rejected() {
    let sz = st::sz();
    let id = ActMap::identity(&sz);
    let konst = ActMap::new(&sz, &sz, vec![1, 1]).unwrap();
    let err = Square::new(id.clone(), id.clone(), id, konst).unwrap_err();
    assert_eq!(err, crate::Error::NotCommuting);
}

#[test]
fn section_examples() {
    let sz = st::sz();
    let theta = st::theta(sz.monoid());
    let g = ActMap::new(&sz, &theta, vec![0, 0]).unwrap();
    assert_eq!(find_section(&g).unwrap().values(), &[1]);

    let reg = st::c2_regular();
    let t = Act::terminal(reg.monoid(), Side::Right);
    let g = ActMap::new(&reg, &t, vec![0, 0]).unwrap();
    assert_eq!(find_section(&g), None);

    let id = ActMap::identity(&reg);
    assert_eq!(find_section(&id), Some(id));
}

#[test]
fn retraction_examples() {
    let z = st::z();
    let sz = st::sz();
    let sz_theta = Act::right(&z, vec![vec![0, 1], vec![1, 1], vec![2, 2]]).unwrap();
    let inc = ActMap::new(&sz, &sz_theta, vec![0, 1]).unwrap();
    assert_eq!(find_retraction(&inc).unwrap().values(), &[0, 1, 1]);

    let id = ActMap::identity(&sz);
    assert_eq!(find_retraction(&id), Some(id));

    let theta = st::theta(&z);
    let iota = ActMap::new(&theta, &sz, vec![1]).unwrap();
    assert_eq!(find_retraction(&iota).unwrap().values(), &[0, 0]);
}

#[test]
fn isomorphism_examples() {
    let a2 = st::a2();
    let iso = find_isomorphism(&a2, &a2).unwrap().unwrap();
    assert!(iso.is_bijective());
    let theta = st::theta(a2.monoid());
    assert_eq!(find_isomorphism(&st::sz(), &theta).unwrap(), None);
    // A2 and SZ have the same shape.
    assert!(find_isomorphism(&a2, &st::sz()).unwrap().is_some());
}

#[test]
fn map_retract_examples() {
    let a2 = st::a2();
    let f = ActMap::identity(&a2);
    let w = find_map_retract(&f, &f).unwrap().unwrap();
    assert!(w.alpha.is_identity() && w.beta.is_identity());

    // f: A → A ⊔ Θ, g = 1_A: α = injection, β = a retraction of f.
    let z = st::z();
    let sz = st::sz();
    let cop = Act::right(&z, vec![vec![0, 1], vec![1, 1], vec![2, 2]]).unwrap();
    let f = ActMap::new(&sz, &cop, vec![0, 1]).unwrap();
    let g = ActMap::identity(&sz);
    let w = find_map_retract(&f, &g).unwrap().unwrap();
    assert!(w.verify(&f, &g));
    assert_eq!(w.alpha.values(), &[0, 1]);
    assert_eq!(w.beta.values(), &[0, 1, 1]);

    // Over C2 the T summand has nowhere to go.
    let c2 = st::c2();
    let reg = st::c2_regular();
    let cop = Act::right(&c2, vec![vec![0, 1], vec![1, 0], vec![2, 2]]).unwrap();
    let f = ActMap::new(&reg, &cop, vec![0, 1]).unwrap();
    let g = ActMap::identity(&reg);
    assert_eq!(find_map_retract(&f, &g).unwrap(), None);
}

#[test]
fn slice_retract_of_split_epi() {
    // 1_Θ is a retract of SZ → Θ over Θ.
    let sz = st::sz();
    let theta = st::theta(sz.monoid());
    let f = ActMap::new(&sz, &theta, vec![0, 0]).unwrap();
    let g = ActMap::identity(&theta);
    let w = find_slice_retract(&f, &g).unwrap().unwrap();
    assert!(w.verify_slice(&f, &g));
}

#[test]
fn fillers_agree_with_brute_force() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let u = Universe::enumerate(&m, 2, Side::Right);
        let maps = u.maps();
        for f in maps {
            for g in maps {
                for uu in enumerate_maps(f.source(), g.source()).unwrap() {
                    for vv in enumerate_maps(f.target(), g.target()).unwrap() {
                        let Ok(sq) = Square::new(f.clone(), g.clone(), uu.clone(), vv) else { continue };
                        let found = find_filler(&sq).unwrap();
                        let brute: Vec<Vec<usize>> = brute_force_maps(f.target(), g.source())
                            .into_iter()
                            .filter(|h| sq.is_filler(&ActMap::from_parts(f.target(), g.source(), h.clone()).unwrap()))
                            .collect();
                        match found {
                            Some(h) => {
                                assert!(sq.is_filler(&h));
                                assert_eq!(Some(h.values().to_vec()), brute.first().cloned());
                            }
                            None => assert!(brute.is_empty()),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn sections_agree_with_brute_force() {
    for m in FiniteMonoid::enumerate_up_to(3) {
        let u = Universe::enumerate(&m, 2, Side::Right);
        for g in u.maps() {
            let brute = brute_force_maps(g.target(), g.source())
                .into_iter()
                .find(|s| s.iter().enumerate().all(|(d, &c)| g.apply(c) == d));
            let found = find_section(g);
            assert_eq!(found.as_ref().map(|s| s.values().to_vec()), brute);
            if let Some(s) = found {
                assert!(g.compose(&s).unwrap().is_identity());
                assert!(g.is_surjective());
            }
        }
    }
}
