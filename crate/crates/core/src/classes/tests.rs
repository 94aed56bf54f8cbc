use super::*;
use crate::act::Side;
use crate::constructions::{coproduct, pullback, rees_quotient, PullbackOutcome};
use crate::hom::{enumerate_maps, find_isomorphism};
use crate::map::ActMap;
use crate::standard::{a2, c2, c2_regular, sz, sz_left, theta, z};
use crate::universe::Universe;
use crate::{Act, EmptinessPolicy, FiniteMonoid};

fn map(a: &Act, b: &Act, v: &[usize]) -> ActMap {
    ActMap::new(a, b, v.to_vec()).unwrap()
}

fn iota() -> ActMap {
    map(&theta(&z()), &sz(), &[1])
}

/// `T`, `C2 ⊔ T` and the injection `C2 → C2 ⊔ T`.
fn c2_injection() -> ActMap {
    let t = theta(&c2());
    coproduct(&[c2_regular(), t]).unwrap().leg("in0").clone()
}

#[test]
fn classify_examples() {
    let inc = coproduct(&[sz(), a2()]).unwrap().leg("in0").clone();
    assert!(classify_map(&inc).unitary);
    let c = classify_map(&iota());
    assert!(c.mono && !c.unitary);
    let all = classify_map(&ActMap::identity(&a2()));
    assert!(all.mono && all.epi && all.split_epi && all.split_mono && all.unitary && all.iso);
}

#[test]
fn unitary_iff_complement_summand() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let u = Universe::enumerate(&m, 3, Side::Right);
        for f in u.maps() {
            let by_def = is_unitary(f);
            let by_decomposition = f.is_injective() && {
                let hit = f.in_image();
                let rest: Vec<usize> = f.target().elements().filter(|&y| !hit[y]).collect();
                // Target is the image plus a union of components.
                f.target().components().iter().all(|c| c.iter().all(|&y| hit[y]) || c.iter().all(|&y| !hit[y]))
                    && f.target().is_closed(&rest)
            };
            assert_eq!(by_def, by_decomposition, "{f:?}");
            if by_def && f.image().len() < f.target().size() {
                let inc = complement(f).unwrap();
                let glued = coproduct(&[f.source().clone(), inc.source().clone()]).unwrap();
                assert!(find_isomorphism(&glued.object, f.target()).unwrap().is_some());
            }
        }
    }
}

#[test]
fn pure_epi_examples() {
    let g = map(&sz(), &theta(&z()), &[0, 0]);
    let d = in_class(&g, &ClassDescriptor::PureEpiBounded(3)).unwrap();
    assert!(d.holds);
    assert_eq!(d.bound, Some(3));

    let g = map(&c2_regular(), &theta(&c2()), &[0, 0]);
    let d = in_class(&g, &ClassDescriptor::PureEpiBounded(1)).unwrap();
    assert!(!d.holds);
    let Evidence::Purity(r) = d.evidence else { panic!("purity evidence") };
    let (m, h) = r.failing.unwrap();
    assert_eq!(m, theta(&c2()));
    assert_eq!(h.values(), &[0]);
}

#[test]
fn flat_rees_mono_example() {
    let d = in_class(&iota(), &ClassDescriptor::FlatReesMonoBounded(2)).unwrap();
    assert!(d.holds);
    let not_mono = map(&sz(), &theta(&z()), &[0, 0]);
    assert!(!in_class(&not_mono, &ClassDescriptor::FlatReesMonoBounded(2)).unwrap().holds);
    assert_eq!(in_class(&iota(), &ClassDescriptor::FlatReesMonoBounded(0)), Err(crate::Error::InvalidBound));
}

#[test]
fn projectivity_examples() {
    let u = Universe::enumerate(&z(), 3, Side::Right);
    for f in u.maps().iter().filter(|f| f.is_surjective()) {
        assert!(is_projective_wrt(&sz(), f).unwrap().holds);
    }
    let g = map(&c2_regular(), &theta(&c2()), &[0, 0]);
    let r = is_projective_wrt(&theta(&c2()), &g).unwrap();
    assert!(!r.holds);
    assert_eq!(r.failing.unwrap().values(), &[0]);
    for f in u.maps().iter().filter(|f| f.is_bijective()) {
        for p in u.acts() {
            assert!(is_projective_wrt(p, f).unwrap().holds);
        }
    }
}

#[test]
fn triangle_examples() {
    let u = Universe::enumerate(&z(), 2, Side::Right);
    let epis: Vec<ActMap> = u.maps().iter().filter(|f| f.is_surjective()).cloned().collect();
    assert!(triangle(LiftSide::Left, &sz(), &epis).unwrap().holds);
    assert!(triangle(LiftSide::Right, &theta(&z()), &[iota()]).unwrap().holds);
    assert!(triangle(LiftSide::Right, &theta(&c2()), &[c2_injection()]).unwrap().holds);
    // C2 itself receives no map from T.
    assert!(!triangle(LiftSide::Right, &c2_regular(), &[c2_injection()]).unwrap().holds);
}

#[test]
fn flatness_examples() {
    for n in 1..=4 {
        assert!(is_flat_bounded(&sz(), n).unwrap().holds);
    }
    let r = is_flat_bounded(&a2(), 2).unwrap();
    assert!(r.holds);
    let fixed_in_sz = |c: &InclusionCheck| {
        find_isomorphism(&c.ambient, &sz_left()).unwrap().is_some() && c.subact == c.ambient.fixed_points()
    };
    assert!(r.checked.iter().any(fixed_in_sz));
    assert!(is_flat_bounded(&theta(&c2()), 4).unwrap().holds);
    assert_eq!(is_flat_bounded(&a2(), 0), Err(crate::Error::InvalidBound));
    assert!(is_flat_bounded(&sz_left(), 2).is_err());
}

#[test]
fn a_non_flat_act_is_caught() {
    // S = {1, a, b} with a and b left zeros of each other: as = a, bs = b
    // for s != 1. As a left act S has one component but its subact {a, b}
    // has two, and Θ ⊗ X counts components.
    let m = FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]], 0).unwrap();
    let r = is_flat_bounded(&Act::terminal(&m, Side::Right), 3).unwrap();
    assert!(!r.holds);
    let bad = r.checked.iter().find(|c| !c.injective).unwrap();
    assert!(bad.collision.is_some());
    assert!(is_flat_bounded(&Act::regular(&m, Side::Right), 3).unwrap().holds);
}

#[test]
fn stability_examples() {
    assert!(is_stable_bounded(&ActMap::identity(&a2()), 3).unwrap().holds);
    assert!(is_stable_bounded(&iota(), 2).unwrap().holds);
    let not_mono = map(&sz(), &theta(&z()), &[0, 0]);
    assert_eq!(is_stable_bounded(&not_mono, 2), Err(crate::Error::NotMono));
}

#[test]
fn lifting_examples() {
    let u = Universe::enumerate(&z(), 2, Side::Right);
    for f in u.maps().iter().filter(|f| f.is_bijective()) {
        assert!(has_lifting(LiftSide::Right, f, u.maps()).unwrap().holds);
        assert!(has_lifting(LiftSide::Left, f, u.maps()).unwrap().holds);
    }

    let g = map(&c2_regular(), &theta(&c2()), &[0, 0]);
    let r = has_lifting(LiftSide::Right, &g, &[c2_injection()]).unwrap();
    assert!(!r.holds);
    let fail = r.failure().unwrap();
    assert_eq!(fail.u.values(), &[0, 1]);

    let unitary: Vec<ActMap> = u.maps().iter().filter(|f| is_unitary(f)).cloned().collect();
    for g in u.maps().iter().filter(|g| classify_map(g).split_epi) {
        let r = has_lifting(LiftSide::Right, g, &unitary).unwrap();
        assert!(r.holds);
        assert!(r.squares.iter().all(|s| s.filler.is_some()));
    }
}

#[test]
fn relative_box_examples() {
    let u = Universe::enumerate(&z(), 2, Side::Right);
    assert_eq!(relative_box(&[], &u, LiftSide::Right).unwrap(), u.maps());
    let all = relative_box(u.maps(), &u, LiftSide::Right).unwrap();
    for f in u.maps().iter().filter(|f| f.is_bijective()) {
        assert!(all.contains(f));
    }
}

#[test]
fn box_algebra_small() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let u = Universe::enumerate(&m, 2, Side::Right);
        let table = LiftingTable::new(&u);
        let n = u.maps().len();
        // Sampled classes: singletons, and the monos.
        let mut classes: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        classes.push((0..n).filter(|&i| u.maps()[i].is_injective()).collect());
        for c in classes {
            let l = table.box_left(&c);
            let r = table.box_right(&c);
            let rl = table.box_right(&l);
            let lr = table.box_left(&r);
            assert!(c.iter().all(|i| rl.contains(i) && lr.contains(i)));
            assert_eq!(table.box_left(&rl), l);
            assert_eq!(table.box_right(&lr), r);
            // Agrees with the direct computation.
            let maps: Vec<ActMap> = c.iter().map(|&i| u.maps()[i].clone()).collect();
            let direct: Vec<usize> = relative_box(&maps, &u, LiftSide::Right)
                .unwrap()
                .iter()
                .map(|g| u.index_of(g).unwrap())
                .collect();
            assert_eq!(direct, r);
        }
    }
}

#[test]
fn fix_fiber_examples() {
    let g = map(&a2(), &sz(), &[0, 1]);
    let fibres = fix_fibers(&g).unwrap();
    assert_eq!(fibres.len(), 1);
    assert_eq!(fibres[0].point, 1);
    assert_eq!(fibres[0].fiber, vec![1]);

    let g = map(&sz(), &theta(&z()), &[0, 0]);
    assert_eq!(fix_fibers(&g).unwrap()[0].fiber, vec![0, 1]);

    let t = theta(&z());
    let two = coproduct(&[t.clone(), t.clone()]).unwrap();
    let fibres = fix_fibers(two.leg("in0")).unwrap();
    assert_eq!(fibres[1].fiber, Vec::<usize>::new());
    assert!(fibres[1].inclusion.is_none());

    let g = map(&c2_regular(), &theta(&c2()), &[0, 0]);
    assert_eq!(fix_fibers(&g), Err(crate::Error::NoLeftZero));
}

#[test]
fn right_lifting_fibres_small() {
    let u = Universe::enumerate(&z(), 2, Side::Right);
    let class = vec![iota()];
    for g in relative_box(&class, &u, LiftSide::Right).unwrap() {
        for k in fix_fibers(&g).unwrap() {
            if let Some(inc) = k.inclusion {
                assert!(triangle(LiftSide::Right, inc.source(), &class).unwrap().holds);
            }
        }
        let fix_hit = g.target().fixed_points().iter().all(|&d| g.in_image()[d]);
        assert_eq!(g.is_surjective(), fix_hit);
    }
}

#[test]
fn triangle_split_small() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let n = 2;
        let u = Universe::enumerate(&m, n, Side::Right);
        let epis: Vec<ActMap> = u.maps().iter().filter(|f| f.is_surjective()).cloned().collect();
        for d in u.acts() {
            let projective = triangle(LiftSide::Left, d, &epis).unwrap().holds;
            let splits = epis.iter().filter(|f| f.target() == d).all(|f| classify_map(f).split_epi);
            if projective {
                assert!(splits);
            }
            // The converse pulls an epi back along a map out of `d`; only
            // pullbacks that stay inside the universe are available.
            if splits {
                for f in &epis {
                    for g in enumerate_maps(d, f.target()).unwrap() {
                        let PullbackOutcome::Exists(p) = pullback(f, &g, EmptinessPolicy::Reject).unwrap() else {
                            continue;
                        };
                        if p.object.size() <= n {
                            assert!(projective_lift(d, f, &g));
                        }
                    }
                }
            }
        }
    }
}

fn projective_lift(d: &Act, f: &ActMap, g: &ActMap) -> bool {
    crate::hom::HomProblem::new(d, f.source()).unwrap().lying_over(f, g.values()).exists()
}

#[test]
fn rees_flat_stable_small() {
    let m = z();
    let flat = FlatnessProbe::new(&m, 2).unwrap();
    let stable = StabilityProbe::new(&m, 2).unwrap();
    let u = Universe::enumerate(&m, 3, Side::Right);
    for f in u.maps().iter().filter(|f| f.is_injective()) {
        let q = rees_quotient(f, true).unwrap().object;
        let q_flat = flat.is_flat(&q).unwrap();
        let f_stable = stable.check(f).unwrap().holds;
        if q_flat {
            assert!(f_stable, "{f:?}");
        }
        if flat.is_flat(f.target()).unwrap() && f_stable {
            assert!(q_flat, "{f:?}");
        }
    }
}

#[test]
fn flat_stable_converse_needs_more_than_stability() {
    // Over the same three-element monoid: 1_S is stable and S is flat, but
    // S/S is the one-point act, which is not flat.
    let m = FiniteMonoid::new(vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 1, 2]], 0).unwrap();
    let s = Act::regular(&m, Side::Right);
    let id = ActMap::identity(&s);
    assert!(is_flat_bounded(&s, 3).unwrap().holds);
    assert!(is_stable_bounded(&id, 3).unwrap().holds);
    let q = rees_quotient(&id, true).unwrap().object;
    assert_eq!(q.size(), 1);
    assert!(!is_flat_bounded(&q, 3).unwrap().holds);
}

#[test]
fn explicit_classes() {
    let x = ActClass::explicit(vec![sz(), sz(), theta(&z())], Closure::default()).unwrap();
    assert_eq!(x.explicit_members().unwrap().len(), 2);
    let both = coproduct(&[sz(), theta(&z())]).unwrap().object;
    assert!(!x.contains(&both).unwrap().holds);
    let closed = ActClass::explicit(
        vec![sz(), theta(&z())],
        Closure {
            coproducts: true,
            ..Closure::default()
        },
    )
    .unwrap();
    assert!(closed.contains(&both).unwrap().holds);
    assert!(!closed.contains(&a2()).unwrap().holds || find_isomorphism(&a2(), &sz()).unwrap().is_some());

    let summand = ActClass::explicit(
        vec![both.clone()],
        Closure {
            summands: true,
            ..Closure::default()
        },
    )
    .unwrap();
    assert!(summand.contains(&theta(&z())).unwrap().holds);

    let retract = ActClass::explicit(
        vec![sz()],
        Closure {
            retracts: true,
            ..Closure::default()
        },
    )
    .unwrap();
    // Θ is a retract of SZ through the fixed point z.
    assert!(retract.contains(&theta(&z())).unwrap().holds);
}

#[test]
fn projective_exact_agrees_with_bounded() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let bounded = ActClass::of_kind(ActClassKind::ProjectiveBounded(3));
        for a in Universe::acts_only(&m, 2, Side::Right) {
            assert_eq!(is_projective_exact(&a).unwrap(), bounded.contains(&a).unwrap().holds, "{a:?}");
        }
    }
}

#[test]
fn unitary_with_complement() {
    let x = ActClass::explicit(vec![a2()], Closure::default()).unwrap();
    let inc = coproduct(&[sz(), a2()]).unwrap().leg("in0").clone();
    let d = in_class(&inc, &ClassDescriptor::UnitaryWithComplementIn(x.clone())).unwrap();
    assert!(d.holds);
    assert_eq!(d.bound, None);
    let inc2 = coproduct(&[a2(), theta(&z())]).unwrap().leg("in0").clone();
    assert!(!in_class(&inc2, &ClassDescriptor::UnitaryWithComplementIn(x.clone())).unwrap().holds);
    // An isomorphism has an empty complement.
    assert!(in_class(&ActMap::identity(&sz()), &ClassDescriptor::UnitaryWithComplementIn(x)).unwrap().holds);
}

#[test]
fn default_bound_rule() {
    assert_eq!(default_bound(&z(), &[&a2()]), 3);
    assert_eq!(default_bound(&FiniteMonoid::cyclic_group(3), &[&theta(&FiniteMonoid::cyclic_group(3))]), 4);
}
