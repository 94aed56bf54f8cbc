use super::*;
use crate::act::Side;
use crate::classes::{has_lifting, in_class, relative_box, ActClass, ClassDescriptor, Closure, LiftSide};
use crate::constructions::{coproduct, pushout, rees_quotient};
use crate::hom::{enumerate_maps, find_isomorphism, find_map_retract};
use crate::map::ActMap;
use crate::standard::{a2, c2, c2_regular, sz, theta, z};
use crate::universe::Universe;
use crate::{Act, FiniteMonoid};

fn map(a: &Act, b: &Act, v: &[usize]) -> ActMap {
    ActMap::new(a, b, v.to_vec()).unwrap()
}

/// `Θ → SZ` onto `z`.
fn iota() -> ActMap {
    map(&theta(&z()), &sz(), &[1])
}

fn class(members: Vec<Act>) -> ActClass {
    ActClass::explicit(members, Closure::default()).unwrap()
}

fn unitary_split(f: &ActMap) -> crate::Result<Factorization> {
    factor_unitary_split(f)
}

#[test]
fn unitary_split_examples() {
    let fz = factor_unitary_split(&iota()).unwrap();
    assert_eq!(fz.middle().size(), 3);
    assert!(fz.certified());
    let a = a2();
    let fold = factor_unitary_split(&ActMap::identity(&a)).unwrap();
    assert_eq!(fold.right.values(), &[0, 1, 0, 1]);
    assert!(fold.certified());
}

#[test]
fn unitary_split_certified_everywhere_small() {
    let u = Universe::enumerate(&z(), 3, Side::Right);
    for f in u.maps() {
        assert!(factor_unitary_split(f).unwrap().certified(), "{:?}", f.values());
    }
}

#[test]
fn precover_examples() {
    let PrecoverOutcome::Precover(p) = precover(&a2(), &class(vec![sz()])).unwrap() else {
        panic!("A2 has an SZ-precover");
    };
    assert_eq!(p.summands.len(), 2);
    assert_eq!(p.map.source().size(), 4);
    assert!(p.map.is_surjective());
    let pre = check_precover(&p.map, &class(vec![sz()]), CoverMode::Precover).unwrap();
    assert!(pre.holds);
    let cover = check_precover(&p.map, &class(vec![sz()]), CoverMode::Cover).unwrap();
    assert!(!cover.holds);
    assert!(!cover.non_iso_endomap.unwrap().is_injective());

    let none = precover(&c2_regular(), &class(vec![theta(&c2())])).unwrap();
    assert_eq!(none, PrecoverOutcome::Nonexistent { members: 1 });

    let t = theta(&z());
    let PrecoverOutcome::Precover(p) = precover(&t, &class(vec![t.clone()])).unwrap() else {
        panic!("Θ covers itself");
    };
    assert_eq!(p.map.source().size(), 1);
    assert!(check_precover(&p.map, &class(vec![t]), CoverMode::Cover).unwrap().holds);
}

#[test]
fn check_precover_finds_unfactored_map() {
    // SZ → A2 onto {b, b}: the map 1 ↦ a does not factor.
    let g = map(&sz(), &a2(), &[1, 1]);
    let r = check_precover(&g, &class(vec![sz()]), CoverMode::Precover).unwrap();
    assert!(!r.holds);
    assert_eq!(r.unfactored.unwrap().1.values(), &[0, 1]);
}

#[test]
fn via_precover_examples() {
    let f = map(&theta(&z()), &a2(), &[1]);
    let fz = factor_via_precover(&f, &class(vec![sz()])).unwrap();
    assert_eq!(fz.middle().size(), 5);
    assert!(fz.right_evidence.as_ref().unwrap().holds);

    let none = factor_via_precover(&ActMap::identity(&c2_regular()), &class(vec![theta(&c2())]));
    assert_eq!(none.unwrap_err(), crate::Error::NoPrecover);
}

#[test]
fn via_precover_lifts_against_unitary_with_projective_complement() {
    let m = z();
    let u = Universe::enumerate(&m, 2, Side::Right);
    let x = ActClass::explicit(vec![sz()], Closure { coproducts: true, summands: true, retracts: true }).unwrap();
    let left = ClassDescriptor::UnitaryWithComplementIn(x.clone());
    let lefts: Vec<&ActMap> = u.maps().iter().filter(|f| in_class(f, &left).unwrap().holds).collect();
    for f in u.maps() {
        let fz = factor_via_precover(f, &x).unwrap();
        for l in &lefts {
            assert!(crate::classes::lifts(l, &fz.right).unwrap());
        }
    }
}

#[test]
fn wfs_unitary_split_passes_small() {
    for m in FiniteMonoid::enumerate_up_to(2) {
        let u = Universe::enumerate(&m, 2, Side::Right);
        let r = wfs_verify(&ClassDescriptor::Unitary, &ClassDescriptor::SplitEpi, &u, &unitary_split).unwrap();
        assert!(r.holds, "{:?}", r.violations.first());
        assert!(!r.bounded);
    }
}

#[test]
fn wfs_unitary_epi_fails_with_square() {
    // Over Z every epi between acts of size at most 3 splits, so the failure
    // only shows over C2, where C2 → T has no section.
    let small_z = Universe::enumerate(&z(), 3, Side::Right);
    let r = wfs_verify(&ClassDescriptor::Unitary, &ClassDescriptor::Epi, &small_z, &unitary_split).unwrap();
    assert!(r.holds);
    let u = Universe::enumerate(&c2(), 3, Side::Right);
    let r = wfs_verify(&ClassDescriptor::Unitary, &ClassDescriptor::Epi, &u, &unitary_split).unwrap();
    assert!(!r.holds);
    let lifting = r.violations.iter().find_map(|v| match v {
        WfsViolation::Lifting { left, right, u, v } => Some((left, right, u, v)),
        _ => None,
    });
    let (f, g, top, bottom) = lifting.expect("a failing square");
    assert!(f.is_injective() && g.is_surjective());
    assert_eq!(g.compose(top).unwrap().values(), bottom.compose(f).unwrap().values());
}

#[test]
fn wfs_mono_epi_fails_over_c2() {
    let u = Universe::enumerate(&c2(), 3, Side::Right);
    let r = wfs_verify(&ClassDescriptor::Mono, &ClassDescriptor::Epi, &u, &unitary_split).unwrap();
    assert!(!r.holds);
    assert!(r.violations.iter().any(|v| matches!(v, WfsViolation::Lifting { .. })));
}

fn soa_example() -> (ActMap, Vec<ActMap>) {
    let a = a2();
    (map(&a, &theta(&z()), &[0, 0]), vec![iota()])
}

#[test]
fn soa_single_step_example() {
    let (g, gens) = soa_example();
    let cfg = SoaConfig {
        start: SoaStart::PushoutFirst,
        ..SoaConfig::default()
    };
    let r = small_object_factorize(&g, &gens, cfg).unwrap();
    assert_eq!(r.status, SoaStatus::Completed);
    assert_eq!(r.steps(), 1);
    assert_eq!(r.stages[0].squares.len(), 1);
    assert_eq!(r.stages[0].squares[0].u.values(), &[1]);
    assert_eq!(r.phi.source().size(), 3);
    assert!(r.rlp_certificate.as_ref().unwrap().holds);
    assert!(r.verify(&gens).unwrap().ok());

    let early = small_object_factorize(&g, &gens, SoaConfig::default()).unwrap();
    assert_eq!(early.status, SoaStatus::Completed);
    assert_eq!(early.steps(), 0);
    assert!(early.theta.is_identity());
}

#[test]
fn soa_c2_under_caps() {
    let t = theta(&c2());
    let gen = coproduct(&[c2_regular(), t.clone()]).unwrap();
    let gen = ActMap::new(&t, &gen.object, vec![gen.leg("in1").apply(0)]).unwrap();
    let g = map(&c2_regular(), &t, &[0, 0]);
    for start in [SoaStart::CheckFirst, SoaStart::PushoutFirst] {
        let cfg = SoaConfig {
            max_steps: 4,
            max_size: 64,
            start,
        };
        let r = small_object_factorize(&g, std::slice::from_ref(&gen), cfg).unwrap();
        let check = r.verify(std::slice::from_ref(&gen)).unwrap();
        assert!(check.composes && check.replays && check.stages_commute);
        if r.status == SoaStatus::Completed {
            assert_eq!(check.rlp_verified, Some(true));
        }
        let cert = r.cof_certificate();
        assert!(cert.verify(&r.theta, std::slice::from_ref(&gen)));
    }
}

#[test]
fn soa_caps_are_reported() {
    // Every pair of points of the middle object gives a square against the
    // constant map on two fixed points, so the middle object keeps growing.
    let m = z();
    let d2 = Act::discrete(&m, Side::Right, 2);
    let d3 = Act::discrete(&m, Side::Right, 3);
    let gen = map(&d2, &d2, &[1, 1]);
    let g = map(&d3, &d3, &[0, 1, 0]);
    let gens = std::slice::from_ref(&gen);
    let steps = SoaConfig {
        max_steps: 1,
        max_size: 200,
        start: SoaStart::CheckFirst,
    };
    let r = small_object_factorize(&g, gens, steps).unwrap();
    assert_eq!((r.status, r.cap), (SoaStatus::CapReached, Some(Cap::Steps)));
    assert_eq!(r.steps(), 1);
    assert!(r.verify(gens).unwrap().ok());
    assert!(r.cof_certificate().verify(&r.theta, gens));
    let size = SoaConfig { max_steps: 6, ..steps };
    let r = small_object_factorize(&g, gens, size).unwrap();
    assert_eq!((r.status, r.cap), (SoaStatus::CapReached, Some(Cap::Size)));
    assert!(r.phi.source().size() <= 200);
    assert!(r.verify(gens).unwrap().ok());
}

#[test]
fn soa_rejects_bad_config() {
    let (g, gens) = soa_example();
    assert!(small_object_factorize(&g, &[], SoaConfig::default()).is_err());
    let zero = SoaConfig {
        max_steps: 0,
        ..SoaConfig::default()
    };
    assert_eq!(small_object_factorize(&g, &gens, zero).unwrap_err(), crate::Error::InvalidBound);
}

#[test]
fn cof_certificate_fast_paths() {
    let gens = vec![iota()];
    let own = cof_certificate(&iota(), &gens, 3).unwrap().unwrap();
    assert_eq!(own.steps.len(), 1);
    assert!(own.verify(&iota(), &gens));

    // Pushout of ι along Θ → A2 onto b.
    let p = pushout(&iota(), &map(&theta(&z()), &a2(), &[1])).unwrap();
    let leg = p.leg("g").clone();
    let cert = cof_certificate(&leg, &gens, 3).unwrap().unwrap();
    assert_eq!(cert.steps.len(), 1);
    assert!(cert.verify(&leg, &gens));

    let (g, gens) = soa_example();
    let cfg = SoaConfig {
        start: SoaStart::PushoutFirst,
        ..SoaConfig::default()
    };
    let r = small_object_factorize(&g, &gens, cfg).unwrap();
    assert!(r.cof_certificate().verify(&r.theta, &gens));
    let found = cof_certificate(&r.theta, &gens, 3).unwrap().unwrap();
    assert!(found.verify(&r.theta, &gens));
}

#[test]
fn cof_certificates_lift_against_the_box() {
    let gens = vec![iota()];
    let u = Universe::enumerate(&z(), 3, Side::Right);
    let right = relative_box(&gens, &u, LiftSide::Right).unwrap();
    for f in u.maps() {
        if let Some(cert) = cof_certificate(f, &gens, 2).unwrap() {
            assert!(cert.verify(f, &gens));
            assert!(has_lifting(LiftSide::Left, f, &right).unwrap().holds, "{:?}", f.values());
        }
    }
}

#[test]
fn pushouts_of_generators_stay_in_the_left_box() {
    let gens = vec![iota()];
    let u = Universe::enumerate(&z(), 3, Side::Right);
    let right = relative_box(&gens, &u, LiftSide::Right).unwrap();
    let mut legs = Vec::new();
    for b in u.acts() {
        for v in enumerate_maps(gens[0].source(), b).unwrap() {
            let leg = pushout(&gens[0], &v).unwrap().leg("g").clone();
            assert!(has_lifting(LiftSide::Left, &leg, &right).unwrap().holds);
            legs.push(leg);
        }
    }
    for f in &legs {
        for g in &legs {
            if g.source() == f.target() && g.target().size() <= 3 {
                let h = g.compose(f).unwrap();
                assert!(has_lifting(LiftSide::Left, &h, &right).unwrap().holds);
            }
        }
    }
}

#[test]
fn f_mono_is_saturated_small() {
    let fmono = ClassDescriptor::FlatReesMonoBounded(3);
    let u = Universe::enumerate(&z(), 2, Side::Right);
    let members: Vec<&ActMap> = u.maps().iter().filter(|f| in_class(f, &fmono).unwrap().holds).collect();
    assert!(!members.is_empty());
    for f in &members {
        let yx = rees_quotient(f, true).unwrap().object;
        for c in u.acts() {
            for w in enumerate_maps(f.source(), c).unwrap() {
                let p = pushout(f, &w).unwrap();
                let g = p.leg("g");
                assert!(g.is_injective());
                let pc = rees_quotient(g, true).unwrap().object;
                assert!(find_isomorphism(&yx, &pc).unwrap().is_some());
            }
        }
        for g in &members {
            if g.source() == f.target() {
                assert!(in_class(&g.compose(f).unwrap(), &fmono).unwrap().holds);
            }
        }
    }
    for f in &members {
        for g in u.maps() {
            if g.source() == f.source() && find_map_retract(f, g).unwrap().is_some() {
                assert!(in_class(g, &fmono).unwrap().holds);
            }
        }
    }
}

#[test]
fn centred_examples() {
    let m = z();
    let t = theta(&m);
    let x = ActClass::explicit(vec![sz().with_centred(true)], Closure { coproducts: true, ..Closure::default() }).unwrap();
    let left = ClassDescriptor::CentredUnitaryWithComplementIn(x.clone());
    let right = ClassDescriptor::ProjectiveFor(x.clone(), 6);
    let fact = |f: &ActMap| factor_centred_precover(f, &x);

    let trivial = centred_wfs_precover(&t, &left, &right, &fact, &sz()).unwrap();
    assert!(trivial.holds);

    // A2 has the single fixed point b.
    let r = centred_wfs_precover(&a2(), &left, &right, &fact, &sz()).unwrap();
    assert_eq!(r.a_star.size(), 1 + 2 * (sz().size() - 1));
    assert!(r.holds, "{r:?}");
    // The constant map onto the base point always exists.
    assert!(!r.degenerate);
    assert_eq!(r.fillers.len(), enumerate_maps(&sz(), &a2()).unwrap().len());
    for (x, h) in &r.fillers {
        assert_eq!(r.right.compose(h).unwrap().values(), x.values());
    }

    assert_eq!(centred(&c2_regular()).unwrap_err(), crate::Error::NoZero);
    let two = coproduct(&[t.clone(), t.clone()]).unwrap().object;
    assert_eq!(centred(&two).unwrap_err(), crate::Error::NotCentred { fixed: 2 });
}
