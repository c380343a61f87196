use homfly_core::invariants::*;
use homfly_core::laurent::json::from_json_str;
use homfly_core::numeric::{eval_invariant, eval_rational, EvalPoint, MpReal};
use homfly_core::oracle::{fixture, homfly_skein};
use homfly_core::{Poly, Rational};

#[test]
fn twist_family_contains_five_two_and_six_one() {
    for n in 1..=4 {
        assert_eq!(h_twist::<Rational>(3, n).unwrap(), h_52(n).unwrap(), "n={n}");
        assert_eq!(h_twist::<Rational>(4, n).unwrap(), h_61(n).unwrap(), "n={n}");
    }
}

#[test]
fn six_one_color_two_is_pinned() {
    let expect = from_json_str(include_str!("data/six_one_n2.json")).unwrap();
    let got = colored_invariant::<Rational>(KnotId::SixOne, 2).unwrap().reduced.unwrap();
    assert_eq!(got.polynomial, expect);
}

#[test]
fn jones_specialization_matches_oracle() {
    let red = reduce_invariant(&h_52::<Rational>(1).unwrap()).unwrap();
    let oracle = homfly_skein(&fixture("5_2").unwrap()).unwrap().to_polynomial().unwrap();
    assert_eq!(jones_specialize(&red.polynomial), jones_specialize(&oracle));
    assert!(jones_specialize(&Poly::one()).is_one());
}

#[test]
fn symbolic_and_numeric_paths_agree() {
    let knots = [KnotId::FiveTwo, KnotId::SixOne, KnotId::Whitehead, KnotId::Twist(5), KnotId::Twist(6)];
    for knot in knots {
        for n in 1..=3u32 {
            for (mn, md) in [(2, 1), (13, 10), (7, 3)] {
                let pt = EvalPoint::from_parts(mn, md, n + 1, 128).unwrap();
                let sym = eval_rational::<MpReal>(&invariant(knot, n as i32).unwrap(), &pt).unwrap();
                let num = eval_invariant::<MpReal>(knot, &pt).unwrap().value;
                assert!(sym.rel_diff(&num) < 1e-20, "{knot} n={n} M={mn}/{md}");
            }
        }
    }
}
