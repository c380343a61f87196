use super::*;
use crate::invariants::{h_twist, invariant};
use crate::laurent::{BiLaurent, RationalFn};
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

type R = RationalFn<BigRational>;

fn h(name: &str) -> R {
    homfly_skein(&fixture(name).unwrap()).unwrap()
}

#[test]
fn fixtures_match_builder() {
    let regen = std::env::var_os("HOMFLY_REGEN_FIXTURES").is_some();
    for spec in fixture_specs() {
        let json = fixture_to_json(spec.name, &build_fixture(spec).unwrap());
        if regen {
            let path = format!("{}/fixtures/{}.json", env!("CARGO_MANIFEST_DIR"), spec.name);
            std::fs::write(path, &json).unwrap();
        } else {
            let (_, text) = FILES.iter().find(|f| f.0 == spec.name).unwrap();
            assert_eq!(*text, json, "fixture {} is stale", spec.name);
        }
    }
    assert_eq!(fixture_specs().len(), fixture_names().count());
}

#[test]
fn unknots() {
    assert!(h("unknot").num().is_one());
    assert!(h("unknot_kink").num().is_one());
    assert_eq!(homfly_skein(&Diagram::unknot()).unwrap(), R::one());
}

#[test]
fn unknown_fixture() {
    assert!(matches!(fixture("nonexistent"), Err(Error::UnknownFixture(_))));
}

#[test]
fn figure_eight_is_classical() {
    // a^{-2} - 1 - z^2 + a^2 with z^2 = q^2 - 2 + q^{-2}
    let one = BigRational::one;
    let expect = BiLaurent::from_terms([
        (-2, 0, one()),
        (2, 0, one()),
        (0, 2, -one()),
        (0, 0, one()),
        (0, -2, -one()),
    ]);
    assert_eq!(h("4_1"), R::from_poly(expect));
}

#[test]
fn formulas_agree_at_color_one() {
    for (name, knot) in [
        ("5_2", KnotId::FiveTwo),
        ("6_1", KnotId::SixOne),
        ("7_2", KnotId::Twist(5)),
        ("8_1", KnotId::Twist(6)),
        ("wh", KnotId::Whitehead),
    ] {
        assert_eq!(fixture_name_for(knot), Some(name));
        assert_eq!(h(name), invariant::<BigRational>(knot, 1).unwrap(), "{name}");
    }
}

#[test]
fn reidemeister_variants_agree() {
    for (base, variants) in [
        ("3_1", &["3_1_r3"][..]),
        ("4_1", &["4_1_r2", "4_1_r3"]),
        ("5_2", &["5_2_r2", "5_2_r3"]),
        ("6_1", &["6_1_r2"]),
        ("wh", &["wh_r2", "wh_r3"]),
    ] {
        let v = h(base);
        for name in variants {
            assert_eq!(h(name), v, "{name}");
        }
    }
}

#[test]
fn mirror_inverts_variables() {
    for name in ["3_1", "5_2", "6_1", "wh"] {
        let d = fixture(name).unwrap();
        let m = homfly_skein(&d.mirror()).unwrap();
        assert_eq!(m, homfly_skein(&d).unwrap().invert_vars(), "{name}");
    }
    assert_ne!(h("3_1"), h("3_1").invert_vars());
}

#[test]
fn tangle_and_closed_agree() {
    for name in ["3_1", "5_2", "6_1", "7_2", "wh"] {
        let d = fixture(name).unwrap();
        assert_eq!(homfly_tangle(&d).unwrap(), homfly_skein(&d).unwrap(), "{name}");
    }
}

#[test]
fn skein_relation_at_every_crossing() {
    for name in ["4_1", "wh", "5_2"] {
        let d = fixture(name).unwrap();
        for k in 0..d.crossings.len() {
            assert!(skein_triple_check(&d, k).unwrap(), "{name} crossing {k}");
        }
    }
}

#[test]
fn whitehead_orientation_does_not_matter() {
    let d = fixture("wh").unwrap();
    let second = d.components(false)[1][0];
    let r = d.reverse_component(second).unwrap();
    assert_ne!(r.crossings, d.crossings);
    assert_eq!(homfly_skein(&r).unwrap(), h("wh"));
}

#[test]
fn twist_family_reaches_k5_and_k6() {
    assert_eq!(h("7_2"), h_twist::<BigRational>(5, 1).unwrap());
}

#[test]
fn crossing_budget() {
    let d = plat(4, &[2; 13]).unwrap();
    assert!(matches!(homfly_skein(&d), Err(Error::CrossingBudget { .. })));
}

#[test]
fn split_unlink_gives_loop_value() {
    let d = plat(4, &[]).unwrap();
    assert_eq!(homfly_skein(&d).unwrap(), loop_value());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_three_crossing_plats(word in prop::collection::vec(
        prop_oneof![Just(1), Just(-1), Just(2), Just(-2), Just(3), Just(-3)], 3)) {
        let d = plat(4, &word).unwrap();
        for k in 0..3 {
            prop_assert!(skein_triple_check(&d, k).unwrap());
        }
        let m = homfly_skein(&d.mirror()).unwrap();
        prop_assert_eq!(m, homfly_skein(&d).unwrap().invert_vars());
    }
}
