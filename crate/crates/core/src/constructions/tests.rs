use super::*;
use crate::act::{EmptinessPolicy, Side};
use crate::hom::{enumerate_maps, find_isomorphism};
use crate::standard::{a2, c2, sz, sz_left, theta, z};
use crate::universe::Universe;
use crate::FiniteMonoid;

fn map(a: &Act, b: &Act, v: &[usize]) -> ActMap {
    ActMap::new(a, b, v.to_vec()).unwrap()
}

fn iso(a: &Act, b: &Act) -> bool {
    find_isomorphism(a, b).unwrap().is_some()
}

#[test]
fn coproduct_examples() {
    let c = coproduct(&[sz(), a2()]).unwrap();
    assert_eq!(c.object.size(), 4);
    assert_eq!(c.object.components().len(), 2);
    assert_eq!(c.leg("in1").values(), &[2, 3]);

    let t = theta(&z());
    let single = coproduct(std::slice::from_ref(&t)).unwrap();
    assert_eq!(single.object, t);
    assert!(single.leg("in0").is_identity());
}

#[test]
fn centred_parts_need_the_wedge() {
    let a = sz().with_centred(true);
    assert_eq!(coproduct(&[a.clone(), a.clone()]), Err(Error::CentredCoproductRequired));
    let w = centred_coproduct(&[a.clone(), a.clone()]).unwrap();
    assert_eq!(w.object.size(), 3);
    assert_eq!(w.object.fixed_points().len(), 1);
    assert!(w.object.is_centred());
    assert_eq!(w.leg("in0").values(), &[0, 1]);
    assert_eq!(w.leg("in1").values(), &[2, 1]);
    assert_eq!(
        centred_coproduct(&[a, coproduct(&[sz(), sz()]).unwrap().object]),
        Err(Error::NotCentred { fixed: 2 })
    );
}

#[test]
fn quotient_examples() {
    let d = quotient(&Congruence::discrete(&sz())).unwrap();
    assert!(iso(&d.object, &sz()));
    let f = quotient(&Congruence::full(&sz())).unwrap();
    assert!(iso(&f.object, &theta(&z())));
    let g = quotient(&Congruence::full(&a2())).unwrap();
    assert_eq!(g.object.size(), 1);
    assert!(g.leg("proj").is_surjective());
}

#[test]
fn quotient_rejects_incompatible_partitions() {
    // {1} and {z} merged with nothing else is fine; {a,b} in A2 ⊔ A2 only
    // on the first copy is fine; over C2 merging 0 with itself only is
    // discrete. A genuine failure: in SZ ⊔ SZ merge 1 with 3 but not z.
    let u = coproduct(&[sz(), sz()]).unwrap().object;
    let rho = Congruence::from_blocks(&u, &[vec![0, 3], vec![1], vec![2]]).unwrap();
    assert!(matches!(quotient(&rho), Err(Error::NotCongruence { .. })));
}

#[test]
fn rees_examples() {
    let t = theta(&z());
    let iota = map(&t, &sz(), &[1]);
    let r = rees_quotient(&iota, true).unwrap();
    assert!(iso(&r.object, &sz()));

    let whole = rees_quotient(&ActMap::identity(&sz()), true).unwrap();
    assert_eq!(whole.object.size(), 1);

    let b = map(&t, &a2(), &[1]);
    let r = rees_quotient(&b, true).unwrap();
    assert_eq!(r.object.size(), 2);
    let abar = r.leg("proj").apply(0);
    let point = r.leg("proj").apply(1);
    assert_eq!(r.object.act(abar, 1), point);
    assert_eq!(r.object.fixed_points(), vec![point]);
}

#[test]
fn rees_requires_mono_when_asked() {
    let f = map(&sz(), &theta(&z()), &[0, 0]);
    assert_eq!(rees_quotient(&f, true), Err(Error::NotMono));
    assert_eq!(rees_quotient(&f, false).unwrap().object.size(), 1);
}

#[test]
fn rees_of_empty_adjoins_a_point() {
    let e = Act::empty(&z(), Side::Right);
    let f = ActMap::from_parts(&e, &sz(), vec![]).unwrap();
    let r = rees_quotient(&f, true).unwrap();
    assert_eq!(r.object.size(), 3);
    assert!(r.object.validate().is_valid());
}

#[test]
fn rees_size_law() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let u = Universe::enumerate(&m, 3, Side::Right);
        for f in u.maps().iter().filter(|f| f.is_injective()) {
            let r = rees_quotient(f, true).unwrap();
            assert_eq!(r.object.size(), f.target().size() - f.image().len() + 1);
            assert!(r.object.validate().is_valid());
        }
    }
}

#[test]
fn pushout_examples() {
    let t = theta(&z());
    // Along an identity.
    let f = map(&t, &sz(), &[1]);
    let p = pushout(&f, &ActMap::identity(&t)).unwrap();
    assert!(iso(&p.object, &sz()));

    let bang = map(&t, &t, &[0]);
    let p = pushout(&f, &bang).unwrap();
    assert_eq!(p.object.size(), 2);
    assert!(iso(&p.object, &sz()));
    assert_eq!(p.leg("v").values(), &[0, 1]);
    assert_eq!(p.leg("g").values(), &[1]);

    let fb = map(&t, &a2(), &[1]);
    let p = pushout(&fb, &bang).unwrap();
    assert_eq!(p.object.size(), 2);
}

#[test]
fn pushout_along_identity_is_the_other_leg() {
    let u = Universe::enumerate(&z(), 2, Side::Right);
    for f in u.maps() {
        let p = pushout(&ActMap::identity(f.source()), f).unwrap();
        assert!(p.leg("g").is_bijective());
    }
}

/// Every cocone factors through the pushout exactly once.
fn check_universal(f: &ActMap, u: &ActMap, targets: &[Act]) {
    let p = pushout(f, u).unwrap();
    let (v, g) = (p.leg("v"), p.leg("g"));
    assert_eq!(v.compose(f).unwrap(), g.compose(u).unwrap());
    for q in targets {
        for pm in enumerate_maps(f.target(), q).unwrap() {
            for qm in enumerate_maps(u.target(), q).unwrap() {
                if pm.compose(f).unwrap() != qm.compose(u).unwrap() {
                    continue;
                }
                let mediators: Vec<_> = enumerate_maps(&p.object, q)
                    .unwrap()
                    .into_iter()
                    .filter(|h| h.compose(v).unwrap() == pm && h.compose(g).unwrap() == qm)
                    .collect();
                assert_eq!(mediators.len(), 1, "f={f:?} u={u:?} p={pm:?} q={qm:?}");
            }
        }
    }
}

#[test]
fn pushout_universal_property_small() {
    for m in [z(), c2()] {
        let u = Universe::enumerate(&m, 2, Side::Right);
        let targets = Universe::acts_only(&m, 3, Side::Right);
        for f in u.maps() {
            for g in u.maps().iter().filter(|g| g.source() == f.source()) {
                check_universal(f, g, &targets);
            }
        }
    }
}

#[test]
fn pullback_examples() {
    let a = a2();
    let id = ActMap::identity(&a);
    let PullbackOutcome::Exists(d) = pullback(&id, &id, EmptinessPolicy::Reject).unwrap() else {
        panic!("diagonal exists");
    };
    assert!(iso(&d.object, &a));

    let t = theta(&z());
    let f = map(&a2(), &t, &[0, 0]);
    let g = map(&sz(), &t, &[0, 0]);
    let PullbackOutcome::Exists(prod) = pullback(&f, &g, EmptinessPolicy::Reject).unwrap() else {
        panic!("product exists");
    };
    assert_eq!(prod.object.size(), 4);
    assert!(prod.object.validate().is_valid());

    // Two points of SZ ⊔ SZ's fixed set hit by different maps.
    let d = coproduct(&[t.clone(), t.clone()]).unwrap().object;
    let f = map(&t, &d, &[0]);
    let g = map(&t, &d, &[1]);
    assert!(matches!(
        pullback(&f, &g, EmptinessPolicy::Reject).unwrap(),
        PullbackOutcome::Nonexistent { .. }
    ));
    let PullbackOutcome::Exists(e) = pullback(&f, &g, EmptinessPolicy::Permit).unwrap() else {
        panic!("permitted");
    };
    assert!(e.object.is_empty());
}

#[test]
fn chain_examples() {
    let a = a2();
    let id = ActMap::identity(&a);
    let c = chain_colimit(&ChainDiagram::from_maps(vec![id]).unwrap()).unwrap();
    assert_eq!(c.result.object, a);
    assert!(c.result.leg("leg0").is_identity());

    let t = theta(&z());
    let i = map(&t, &sz(), &[1]);
    let big = coproduct(&[sz(), t.clone()]).unwrap();
    let j = big.leg("in0").clone();
    let chain = ChainDiagram::from_maps(vec![i, j.clone()]).unwrap();
    let c = chain_colimit(&chain).unwrap();
    assert_eq!(c.result.object, big.object);
    assert_eq!(c.result.leg("leg1"), &j);
    assert_eq!(c.result.leg("leg0").values(), &[1]);
    // Elements 1, z, θ of SZ ⊔ Θ.
    assert_eq!(c.first_hit, vec![1, 0, 2]);

    let h = map(&t, &big.object, &[1]);
    let (stage, h0) = factor_through_stage(&chain, &h).unwrap().unwrap();
    assert_eq!(stage, 0);
    assert_eq!(h0.values(), &[0]);
    let h = map(&t, &big.object, &[2]);
    assert_eq!(factor_through_stage(&chain, &h).unwrap().unwrap().0, 2);
}

#[test]
fn tensor_examples() {
    assert_eq!(tensor(&a2(), &sz_left()).unwrap().num_classes(), 2);
    assert_eq!(tensor(&theta(&z()), &sz_left()).unwrap().num_classes(), 1);

    let point = Act::terminal(&z(), Side::Left);
    let incl = map(&point, &sz_left(), &[1]);
    let t = tensor(&a2(), &point).unwrap();
    assert_eq!(t.num_classes(), 1);
    let ind = induced_map(&t, &incl).unwrap();
    assert_eq!(ind.codomain.num_classes(), 2);
    let classes = ind.codomain.classes();
    assert_eq!(classes[0], vec![(0, 0)]);
    assert_eq!(classes[1], vec![(0, 1), (1, 0), (1, 1)]);
    assert!(ind.is_injective());
}

#[test]
fn tensor_rejects_wrong_sides() {
    assert!(matches!(tensor(&a2(), &sz()), Err(Error::SideMismatch { .. })));
    assert!(matches!(tensor(&sz_left(), &sz_left()), Err(Error::SideMismatch { .. })));
}

#[test]
fn tensor_unit() {
    for m in [z(), c2()] {
        let s = Act::regular(&m, Side::Left);
        for a in Universe::acts_only(&m, 3, Side::Right) {
            let t = tensor(&a, &s).unwrap();
            assert_eq!(t.num_classes(), a.size());
            let classes: Vec<usize> = a.elements().map(|x| t.class(x, m.identity())).collect();
            let mut sorted = classes.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), a.size());
        }
    }
}

#[test]
fn descend_gives_induced_rees_map() {
    // X = {z} ⊆ Y = SZ ⊆ Z' = SZ ⊔ Θ.
    let t = theta(&z());
    let f = map(&t, &sz(), &[1]);
    let big = coproduct(&[sz(), t.clone()]).unwrap();
    let g = big.leg("in0").clone();
    let yx = rees_quotient(&f, true).unwrap();
    let zx = rees_quotient(&g.compose(&f).unwrap(), true).unwrap();
    let gbar = descend(&g, yx.leg("proj"), zx.leg("proj")).unwrap();
    assert!(gbar.is_injective());
    assert!(gbar.validate().is_valid());

    // Collapsing SZ to a point cannot descend to the identity on SZ.
    let collapse = rees_quotient(&ActMap::identity(&sz()), true).unwrap();
    let id = ActMap::identity(&sz());
    assert!(descend(&id, collapse.leg("proj"), &id).is_err());
}

#[test]
fn provenance_replays() {
    let t = theta(&z());
    let f = map(&t, &sz(), &[1]);
    let results = vec![
        coproduct(&[sz(), a2()]).unwrap(),
        rees_quotient(&f, true).unwrap(),
        pushout(&f, &map(&t, &a2(), &[1])).unwrap(),
        quotient(&Congruence::full(&a2())).unwrap(),
        centred_coproduct(&[sz(), a2()]).unwrap(),
    ];
    for r in results {
        assert_eq!(r.provenance.replay().unwrap(), r);
    }
}
