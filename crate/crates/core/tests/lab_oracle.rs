//! Finite-ring checks against independent oracles and cross-checks.

mod common;

use common::*;
use edr_core::lab::{
    check_clean, check_idempotent_stable_range_1, check_property, check_stable_range_1,
    find_coprime_splitting, is_diadem_direct, verify_associate_diadems, FiniteTables, LabConfig,
    Property, PropertyReport,
};
use edr_core::{Element, Error, Ring};
use rand::Rng as _;

fn wide() -> LabConfig {
    LabConfig {
        pair_bound: 64,
        triple_bound: 64,
        ..LabConfig::default()
    }
}

#[test]
fn baseline_on_small_rings() {
    for n in 2..=20u64 {
        let r = Ring::integers_mod(n).unwrap();
        let t = FiniteTables::new(&r).unwrap();
        for p in Property::ALL {
            let rep = t.check(p);
            assert!(rep.holds, "{rep}");
            let n = n as u128;
            let domain = match p {
                Property::StableRange2 => n * n * n,
                Property::Clean => n,
                _ => n * n,
            };
            assert_eq!(rep.certificate_count, domain, "{rep}");
        }
    }
}

#[test]
fn clean_matches_isr1() {
    for r in small_suite().into_iter().chain(product_quotient_suite()) {
        let clean = check_clean(&r).unwrap().holds;
        let isr1 = check_idempotent_stable_range_1(&r).unwrap().holds;
        assert_eq!(clean, isr1, "{r}");
    }
}

#[test]
fn quotient_criterion_matches_direct_definition() {
    for desc in ["Z/12", "Z/8", "Z/2 x Z/3", "GF(2)[x]/(0,0,1)", "Z/9"] {
        let r = Ring::parse(desc).unwrap();
        let els = r.elements().unwrap();
        for a in &els {
            for b in &els {
                if !edr_core::lab::is_comaximal(&r, &[a.clone(), b.clone()]) {
                    continue;
                }
                for l in &els {
                    let direct = is_diadem_direct(&r, a, b, l).unwrap();
                    let q = r.quotient(&r.add_mul(a, b, l)).unwrap();
                    assert_eq!(direct, check_stable_range_1(&q).unwrap().holds, "{desc}");
                }
            }
        }
    }
}

#[test]
fn direct_definition_matches_raw_enumeration() {
    for desc in ["Z/6", "Z/4", "Z/2 x Z/2"] {
        let r = Ring::parse(desc).unwrap();
        let t = FiniteTables::new(&r).unwrap();
        let els = r.elements().unwrap();
        let comax = |v: &[Element]| r.ideal_generated(v).unwrap().contains(&r.one());
        for (wi, w) in els.iter().enumerate() {
            let raw = els.iter().all(|c| {
                els.iter().all(|d| {
                    !comax(&[w.clone(), c.clone(), d.clone()])
                        || els.iter().any(|m| comax(&[w.clone(), r.add_mul(c, d, m)]))
                })
            });
            assert_eq!(t.diadem_direct(wi as u32), raw, "{desc} {w:?}");
        }
    }
}

#[test]
fn radical_and_principal_quotients_keep_dyadic_range_1() {
    for r in small_suite() {
        let base = check_property(&r, Property::DyadicRange1, &wide()).unwrap().holds;
        let j = r.jacobson_radical().unwrap();
        let rj = r.quotient_by_ideal(&j.members).unwrap();
        assert_eq!(base, check_property(&rj, Property::DyadicRange1, &wide()).unwrap().holds);
        for c in r.elements().unwrap() {
            let q = r.quotient(&c).unwrap();
            assert!(check_property(&q, Property::DyadicRange1, &wide()).unwrap().holds, "{r} / {c:?}");
        }
        if base {
            assert!(check_property(&r, Property::StableRange2, &wide()).unwrap().holds);
        }
    }
}

#[test]
fn associates_differ_by_diadems() {
    for desc in ["Z/12", "Z/8", "GF(5)", "Z/2 x Z/3", "GF(2)[x]/(0,0,1)"] {
        let r = Ring::parse(desc).unwrap();
        let rep = verify_associate_diadems(&r).unwrap();
        assert!(rep.holds, "{rep}");
        assert!(!rep.replay().unwrap());
    }
}

#[test]
fn jacobson_radical_is_the_squarefree_kernel() {
    for n in 2..=50u64 {
        let r = Ring::integers_mod(n).unwrap();
        let rad = radical(n);
        let want: Vec<Element> = (0..n).filter(|x| x % rad == 0).map(Element::Residue).collect();
        let j = r.jacobson_radical().unwrap();
        assert_eq!(j.members, want, "Z/{n}");
        assert!(j.is_ideal());
    }
}

#[test]
fn splitting_agrees_with_prime_routing() {
    let mut r = rng(11);
    for c in 2..=120i64 {
        let mut done = 0;
        while done < 20 {
            let (a, b) = (r.gen_range(-500..=500), r.gen_range(-500..=500));
            if gcd_i64(gcd_i64(a, b), c) != 1 {
                continue;
            }
            done += 1;
            let s = find_coprime_splitting(c, a, b).unwrap();
            assert!(s.holds(a, b));
            let (pr, ps) = prime_routing_split(c, a);
            assert_eq!(pr * ps, c);
            assert_eq!((gcd_i64(pr, ps), gcd_i64(pr, a), gcd_i64(ps, b)), (1, 1, 1));
            // the search takes the least valid r
            assert!(s.r <= pr);
        }
    }
}

#[test]
fn fabricated_counterexamples_do_not_replay() {
    let r = Ring::integers_mod(8).unwrap();
    let t = FiniteTables::new(&r).unwrap();
    let mut rng = rng(12);
    for p in Property::ALL {
        let honest = t.check(p);
        for _ in 0..20 {
            let arity = match p {
                Property::Clean => 1,
                Property::StableRange2 => 3,
                _ => 2,
            };
            let labels = ["a", "b", "c"];
            let fake = PropertyReport {
                holds: false,
                counterexample: Some(
                    (0..arity)
                        .map(|i| (labels[i], Element::Residue(rng.gen_range(0..8))))
                        .collect(),
                ),
                ..honest.clone()
            };
            assert!(!fake.replay().unwrap(), "{fake}");
        }
    }
}

#[test]
fn error_contract() {
    assert!(matches!(check_clean(&Ring::integers()), Err(Error::InfiniteRing(_))));
    assert!(matches!(
        check_property(&Ring::integers_mod(51).unwrap(), Property::Clean, &LabConfig::default()),
        Err(Error::TooLarge { .. })
    ));
    assert!(matches!(find_coprime_splitting(0, 1, 1), Err(Error::Precondition(_))));
}
