use homfly_core::coefficients::*;
use homfly_core::invariants::*;
use homfly_core::laurent::*;
use homfly_core::numeric::{eval_invariant, EvalPoint, MpReal};
use homfly_core::{Poly, RatFn, Rational};
use proptest::prelude::*;

fn r(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i32..=3, -4i32..=4, -5i64..=5), 0..6)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(a, q, c)| (a, q, r(c)))))
}

fn qpoly_strategy() -> impl Strategy<Value = QLaurent<Rational>> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 1..5)
        .prop_map(|ts| QLaurent::from_terms(ts.into_iter().map(|(q, c)| (q, r(c)))))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(x in poly_strategy(), y in poly_strategy(), w in poly_strategy()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &w, &x * &(&y * &w));
        prop_assert_eq!(&(&x + &y) + &w, &x + &(&y + &w));
        prop_assert_eq!(&x * &(&y + &w), &(&x * &y) + &(&x * &w));
        prop_assert!(x.terms().all(|(_, _, c)| *c != r(0)));
    }

    #[test]
    fn exact_division_round_trip(p in poly_strategy(), d in qpoly_strategy()) {
        let prod = p.mul_q(&d);
        prop_assert_eq!(exact_div(&prod, &Poly::from_q(d)).unwrap(), p);
    }

    #[test]
    fn invert_vars_is_a_homomorphism(x in poly_strategy(), y in poly_strategy()) {
        prop_assert_eq!((&x * &y).invert_vars(), &x.invert_vars() * &y.invert_vars());
        prop_assert_eq!(x.invert_vars().invert_vars(), x);
    }

    #[test]
    fn rational_function_field_ops(x in poly_strategy(), d in qpoly_strategy(), y in poly_strategy()) {
        let f = RatFn::from_parts(x.clone(), d.clone()).unwrap();
        let g = RatFn::from_poly(y);
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&f * &RatFn::from_poly(Poly::from_q(d)), RatFn::from_poly(x));
    }

    #[test]
    fn framed_integer_at_a_equals_q_power(m in -4i32..=4, n in -4i32..=4) {
        let f = framed_integer::<Rational>(n);
        let sub = f.num().substitute_a(m);
        prop_assert_eq!(sub.div_exact(f.den()).unwrap(), quantum_integer(m + n));
    }

    #[test]
    fn numeric_representation_independence(mn in 3i64..40, md in 1i64..8, big_n in 2u32..12) {
        prop_assume!(mn > md);
        let p = EvalPoint::from_parts(mn, md, big_n, 160).unwrap();
        let p2 = EvalPoint::from_parts(2 * mn, 2 * md, big_n, 160).unwrap();
        for knot in [KnotId::FiveTwo, KnotId::Whitehead, KnotId::FigureEight] {
            let a = eval_invariant::<MpReal>(knot, &p).unwrap().value;
            let b = eval_invariant::<MpReal>(knot, &p2).unwrap().value;
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn numeric_conjugation(mn in 3i64..30, md in 1i64..5, big_n in 2u32..10) {
        prop_assume!(mn > md);
        let p = EvalPoint::from_parts(mn, md, big_n, 192).unwrap();
        for knot in [KnotId::SixOne, KnotId::Twist(5), KnotId::Whitehead] {
            let a = eval_invariant::<MpReal>(knot, &p).unwrap().value;
            let b = eval_invariant::<MpReal>(knot, &p.conjugated()).unwrap().value;
            prop_assert!(a.conj().rel_diff(&b) < 1e-40);
        }
    }
}

#[test]
fn quantum_integer_times_z() {
    for n in 1..=12 {
        let lhs = &quantum_integer::<Rational>(n) * &z_poly();
        let rhs = QLaurent::from_terms([(n, r(1)), (-n, r(-1))]);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn gauss_binomial_pascal() {
    for b in [1, 2, -2] {
        for n in 1..=12 {
            for k in 0..=n {
                let g = |n, k| gauss_binomial::<Rational>(n, k, b).unwrap();
                let lower = if k >= 1 { g(n - 1, k - 1) } else { QLaurent::zero() };
                // both forms of the recurrence
                let first = &lower + &g(n - 1, k).shift(b * k);
                let second = &lower.shift(b * (n - k)) + &g(n - 1, k);
                assert_eq!(g(n, k), first, "n={n} k={k} b={b}");
                assert_eq!(g(n, k), second, "n={n} k={k} b={b}");
            }
        }
    }
}

#[test]
fn beta_recurrence() {
    for m in 3..=6 {
        for n in 3..=6 {
            for j in 2..=4.min(m.min(n) - 1) {
                for i in 2..=j {
                    for k in 0..=i {
                        let lhs = beta::<Rational>(i, j, k, m, n).unwrap();
                        let rhs = beta_recurrence_rhs(i, j, k, m, n).unwrap();
                        assert_eq!(lhs, rhs, "i={i} j={j} k={k} m={m} n={n}");
                    }
                }
            }
        }
    }
}

#[test]
fn c_recurrence() {
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                for l1 in 0..=i {
                    for l2 in 0..=j.min(k) {
                        if l1 + l2 == 0 {
                            continue;
                        }
                        let lhs = c_coeff::<Rational>(l1, l2, i, j, k).unwrap();
                        let rhs = c_recurrence_rhs(l1, l2, i, j, k).unwrap();
                        assert_eq!(lhs, rhs, "l1={l1} l2={l2} i={i} j={j} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn gamma_assembly() {
    for i in 1..=3 {
        for j in 1..=3 {
            for k in 1..=3 {
                for l in 0..=j.min(k) {
                    assert_eq!(
                        gamma::<Rational>(i, j, k, l).unwrap(),
                        gamma_from_c(i, j, k, l).unwrap(),
                        "i={i} j={j} k={k} l={l}"
                    );
                }
            }
        }
    }
}

#[test]
fn s_branches_agree() {
    for n in 0..=6 {
        let a = s_coeff_branch::<Rational>(n, n, SBranch::MAtLeastN).unwrap();
        let b = s_coeff_branch::<Rational>(n, n, SBranch::NAtLeastM).unwrap();
        assert_eq!(a, b, "n={n}");
        assert_eq!(s_coeff::<Rational>(n, n).unwrap(), a);
    }
}

#[test]
fn alpha_base_case_is_skein_coefficient() {
    // -a^{-1}(q - q^{-1})
    let expect = Poly::from_terms([(-1, 1, r(-1)), (-1, -1, r(1))]);
    assert_eq!(alpha::<Rational>(1, 1, 1).unwrap(), expect);
}

#[test]
fn reduced_knot_invariants_are_integral() {
    for knot in [KnotId::FiveTwo, KnotId::SixOne, KnotId::Twist(5), KnotId::Twist(6)] {
        for n in 1..=4 {
            let c = colored_invariant::<Rational>(knot, n).unwrap();
            let red = c.reduced.unwrap();
            assert!(red.is_polynomial());
            assert!(red.polynomial.terms().all(|(_, _, x)| x.is_integer()), "{knot} n={n}");
            assert!(red.polynomial.substitute_a(1).is_one(), "{knot} n={n}");
        }
    }
}

#[test]
fn prefactor_round_trip() {
    for knot in [KnotId::FiveTwo, KnotId::SixOne, KnotId::Whitehead, KnotId::Twist(7)] {
        let w = knot.prefactor_exponent().unwrap();
        let v = invariant::<Rational>(knot, 2).unwrap();
        let stripped = v.mul_poly(&writhe_prefactor(2, -w));
        assert_eq!(stripped.mul_poly(&writhe_prefactor(2, w)), v);
    }
    assert_eq!(KnotId::FiveTwo.prefactor_exponent(), Some(6));
    assert_eq!(KnotId::SixOne.prefactor_exponent(), Some(2));
    assert_eq!(KnotId::Whitehead.prefactor_exponent(), Some(2));
}

#[test]
fn whitehead_denominator_is_cyclotomic() {
    for n in 1..=3 {
        let red = reduce_invariant(&h_whitehead::<Rational>(n).unwrap()).unwrap();
        // divides z^n [n]!
        let bound = &z_poly::<Rational>().pow(n as u32) * &qfactorial(n);
        assert!(bound.div_exact(&red.clearing_factor).is_some(), "n={n}");
        assert!(!red.is_polynomial());
    }
}
