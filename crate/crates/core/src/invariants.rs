//! Colored HOMFLY polynomials of 5_2, 6_1, the twist knots K_p and the
//! Whitehead link.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::coefficients::{alpha, alpha_signed, closing_ratio, gamma, s_coeff};
use crate::error::{precondition, Error, Result};
use crate::laurent::{BiLaurent, QLaurent, RationalFn};
use crate::scalar::Coefficient;

/// The knots and links with a known colored invariant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KnotId {
    FigureEight,
    FiveTwo,
    SixOne,
    Whitehead,
    /// K_p: p half twists and a clasp, p >= 3.
    Twist(u32),
}

impl KnotId {
    /// Twist(3) is 5_2 and Twist(4) is 6_1.
    pub fn canonical(self) -> KnotId {
        match self {
            KnotId::Twist(3) => KnotId::FiveTwo,
            KnotId::Twist(4) => KnotId::SixOne,
            k => k,
        }
    }

    pub fn same_knot(self, other: KnotId) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn is_link(self) -> bool {
        self == KnotId::Whitehead
    }

    /// The exponent w of the framing prefactor {a^n q^{n(n-1)}}^w, when the
    /// invariant has a symbolic formula.
    pub fn prefactor_exponent(self) -> Option<i32> {
        match self.canonical() {
            KnotId::FiveTwo => Some(6),
            KnotId::SixOne | KnotId::Whitehead => Some(2),
            KnotId::Twist(p) => Some(twist_params(p as i32).1),
            KnotId::FigureEight => None,
        }
    }
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotId::FigureEight => write!(f, "4_1"),
            KnotId::FiveTwo => write!(f, "5_2"),
            KnotId::SixOne => write!(f, "6_1"),
            KnotId::Whitehead => write!(f, "wh"),
            KnotId::Twist(p) => write!(f, "twist:{p}"),
        }
    }
}

impl FromStr for KnotId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "4_1" | "fig8" => Ok(KnotId::FigureEight),
            "5_2" => Ok(KnotId::FiveTwo),
            "6_1" => Ok(KnotId::SixOne),
            "wh" | "whitehead" => Ok(KnotId::Whitehead),
            other => {
                let p = other
                    .strip_prefix("twist:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| Error::Domain(format!("unknown knot `{s}`")))?;
                if p < 3 {
                    return precondition(format!("twist knots need p >= 3 (got {p})"));
                }
                Ok(KnotId::Twist(p))
            }
        }
    }
}

/// `(p', p'', mirrored)` for K_p: the number of nested sums, the prefactor
/// exponent, and whether the outer α takes (a^{-1}, q^{-1}).
pub(crate) fn twist_params(p: i32) -> (i32, i32, bool) {
    let p1 = (p + 1) / 2;
    if p % 2 == 0 {
        (p1, p - 2, true)
    } else {
        (p1, p + 3, false)
    }
}

/// {a^n q^{n(n-1)}}^w.
pub fn writhe_prefactor<C: Coefficient>(n: i32, w: i32) -> BiLaurent<C> {
    BiLaurent::monomial(n * w, n * (n - 1) * w, C::one())
}

/// The framing monomial a^{-2s} q^{-2s(s-1) - 4su} with s = n - u.
fn framing<C: Coefficient>(n: i32, u: i32) -> BiLaurent<C> {
    let s = n - u;
    BiLaurent::monomial(-2 * s, -2 * s * (s - 1) - 4 * s * u, C::one())
}

fn check_color(n: i32) -> Result<()> {
    if n < 1 {
        return precondition(format!("color must be at least 1 (got {n})"));
    }
    Ok(())
}

/// Sums polynomials grouped by closing-ratio length d, then applies
/// `[n-1;a]...[n-d;a] / ([n]...[n+1-d])` once per group.
fn close_groups<C: Coefficient>(n: i32, groups: BTreeMap<i32, BiLaurent<C>>) -> Result<RationalFn<C>> {
    let terms = groups
        .into_iter()
        .map(|(d, p)| Ok(closing_ratio::<C>(n, n - d)?.mul_poly(&p)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFn::sum(terms))
}

struct AlphaCache<C> {
    map: HashMap<(i32, i32, bool), BiLaurent<C>>,
}

impl<C: Coefficient> AlphaCache<C> {
    fn new() -> Self {
        AlphaCache { map: HashMap::new() }
    }

    /// α^i_{m,m}, optionally mirrored.
    fn get(&mut self, m: i32, i: i32, mirrored: bool) -> Result<&BiLaurent<C>> {
        if !self.map.contains_key(&(m, i, mirrored)) {
            let v = alpha_signed(m, m, i, mirrored)?;
            self.map.insert((m, i, mirrored), v);
        }
        Ok(&self.map[&(m, i, mirrored)])
    }
}

fn two_bridge_triple_sum<C: Coefficient>(n: i32, outer_mirrored: bool, w: i32) -> Result<RationalFn<C>> {
    check_color(n)?;
    let mut cache = AlphaCache::<C>::new();
    let mut groups: BTreeMap<i32, BiLaurent<C>> = BTreeMap::new();
    for i in 0..=n {
        let ai = cache.get(n, i, outer_mirrored)?.clone();
        for j in 0..=i {
            let ea = -2 * (2 * n - 2 * i + j);
            let eq = -2 * (2 * n * n - 2 * n - 2 * i * i + 2 * i + 2 * i * j - j * j - j);
            let head = (&ai * cache.get(i, j, false)?).shift(ea, eq);
            for k in 0..=(i - j) {
                let t = &head * cache.get(i - j, k, false)?;
                let slot = groups.entry(i - j - k).or_default();
                *slot = &*slot + &t;
            }
        }
    }
    Ok(close_groups(n, groups)?.mul_poly(&writhe_prefactor(n, w)))
}

/// H_n(5_2; a, q).
pub fn h_52<C: Coefficient>(n: i32) -> Result<RationalFn<C>> {
    two_bridge_triple_sum(n, false, 6)
}

/// H_n(6_1; a, q): the 5_2 sum with a mirrored outer α and prefactor exponent 2.
pub fn h_61<C: Coefficient>(n: i32) -> Result<RationalFn<C>> {
    two_bridge_triple_sum(n, true, 2)
}

/// H_n(K_p; a, q) for the twist knot with p half twists, p >= 3.
///
/// Sums over i and over compositions (j_1, ..., j_{p'}) with
/// j_1 + ... + j_{p'} <= i, in lexicographic order.
pub fn h_twist<C: Coefficient>(p: i32, n: i32) -> Result<RationalFn<C>> {
    if p < 3 {
        return precondition(format!("twist knots need p >= 3 (got {p})"));
    }
    check_color(n)?;
    let (levels, w, mirrored) = twist_params(p);
    let mut cache = AlphaCache::<C>::new();
    let mut groups: BTreeMap<i32, BiLaurent<C>> = BTreeMap::new();
    for i in 0..=n {
        let head = cache.get(n, i, mirrored)? * &framing(n, i);
        twist_chain(n, i, levels, head, &mut cache, &mut groups)?;
    }
    Ok(close_groups(n, groups)?.mul_poly(&writhe_prefactor(n, w)))
}

// Depth-first over the remaining levels; `u` is i minus the partial sum so far.
fn twist_chain<C: Coefficient>(
    n: i32,
    u: i32,
    levels_left: i32,
    acc: BiLaurent<C>,
    cache: &mut AlphaCache<C>,
    groups: &mut BTreeMap<i32, BiLaurent<C>>,
) -> Result<()> {
    if levels_left == 0 {
        let slot = groups.entry(u).or_default();
        *slot = &*slot + &acc;
        return Ok(());
    }
    for j in 0..=u {
        let mut next = &acc * cache.get(u, j, false)?;
        if levels_left > 1 {
            next = &next * &framing(n, u - j);
        }
        twist_chain(n, u - j, levels_left - 1, next, cache, groups)?;
    }
    Ok(())
}

/// H_n(WH; a, q), the Whitehead link with both components colored n.
pub fn h_whitehead<C: Coefficient>(n: i32) -> Result<RationalFn<C>> {
    check_color(n)?;
    let mut s = Vec::with_capacity(n as usize + 1);
    for m in 0..=n {
        let v = s_coeff::<C>(n, m)?;
        let prod = &v * &v.invert_vars();
        s.push(prod);
    }
    let mut terms = Vec::new();
    for i in 1..n {
        let ai = RationalFn::from_poly(alpha::<C>(n, n, i)?);
        for j in 0..=i {
            let g = gamma::<C>(n - i, i, i, j)?;
            terms.push(&(&ai * &g) * &s[(i - j) as usize]);
        }
    }
    terms.push(s[n as usize].mul_poly(&alpha(n, n, n)?));
    terms.push(closing_ratio::<C>(n, 0)?.mul_poly(&alpha(n, n, 0)?));
    Ok(RationalFn::sum(terms).mul_poly(&writhe_prefactor(n, 2)))
}

/// The symbolic invariant of `knot` at color n.
pub fn invariant<C: Coefficient>(knot: KnotId, n: i32) -> Result<RationalFn<C>> {
    match knot.canonical() {
        KnotId::FiveTwo => h_52(n),
        KnotId::SixOne => h_61(n),
        KnotId::Whitehead => h_whitehead(n),
        KnotId::Twist(p) => h_twist(p as i32, n),
        KnotId::FigureEight => Err(Error::Domain(
            "no symbolic formula for 4_1; use the numeric sine formula".into(),
        )),
    }
}

/// A reduced invariant: `polynomial · den = num · clearing_factor`.
///
/// For knots the clearing factor is 1. For the Whitehead link it is the
/// smallest q-only factor that makes the value a Laurent polynomial,
/// scaled to leading coefficient 1 and centered exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduction<C: Coefficient> {
    pub polynomial: BiLaurent<C>,
    pub clearing_factor: QLaurent<C>,
}

impl<C: Coefficient> Reduction<C> {
    pub fn is_polynomial(&self) -> bool {
        self.clearing_factor.is_one()
    }
}

/// Cancels the denominator of `v` as far as possible.
pub fn reduce_invariant<C: Coefficient>(v: &RationalFn<C>) -> Result<Reduction<C>> {
    let r = v.reduced();
    let (num, den) = r.into_parts();
    if den.is_one() {
        return Ok(Reduction { polynomial: num, clearing_factor: QLaurent::one() });
    }
    let deg = den.high_degree().unwrap();
    let s = deg / 2;
    let clearing = den.shift(-s);
    let polynomial = num.shift(0, -s);
    if polynomial.mul_q(&den) != num.mul_q(&clearing) {
        return Err(Error::NonDivisible { a_degree: 0 });
    }
    Ok(Reduction { polynomial, clearing_factor: clearing })
}

/// The substitution a = q².
pub fn jones_specialize<C: Coefficient>(p: &BiLaurent<C>) -> QLaurent<C> {
    p.substitute_a(2)
}

/// The exact invariant together with its reduction.
#[derive(Clone, Debug)]
pub struct ColoredInvariant<C: Coefficient> {
    pub knot: KnotId,
    pub color: i32,
    pub value: RationalFn<C>,
    pub reduced: Option<Reduction<C>>,
}

pub fn colored_invariant<C: Coefficient>(knot: KnotId, n: i32) -> Result<ColoredInvariant<C>> {
    let value = invariant::<C>(knot, n)?;
    let reduced = reduce_invariant(&value)?;
    if !knot.is_link() && !reduced.is_polynomial() {
        return Err(Error::NonDivisible { a_degree: 0 });
    }
    Ok(ColoredInvariant { knot, color: n, value, reduced: Some(reduced) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type Q = Ratio<i64>;

    fn poly(terms: &[(i32, i32, i64)]) -> BiLaurent<Q> {
        BiLaurent::from_terms(terms.iter().map(|&(a, q, c)| (a, q, Q::from(c))))
    }

    #[test]
    fn parse_knots() {
        assert_eq!("twist:5".parse::<KnotId>().unwrap(), KnotId::Twist(5));
        assert_eq!("WH".parse::<KnotId>().unwrap(), KnotId::Whitehead);
        assert!("twist:2".parse::<KnotId>().is_err());
        assert!(KnotId::Twist(3).same_knot(KnotId::FiveTwo));
        assert_eq!(KnotId::Twist(7).to_string(), "twist:7");
    }

    #[test]
    fn five_two_color_one() {
        let r = reduce_invariant(&h_52::<Q>(1).unwrap()).unwrap();
        let expect = poly(&[
            (6, 0, -1),
            (4, 2, 1),
            (4, 0, -1),
            (4, -2, 1),
            (2, 2, 1),
            (2, 0, -1),
            (2, -2, 1),
        ]);
        assert_eq!(r.polynomial, expect);
        assert!(r.is_polynomial());
    }

    #[test]
    fn six_one_color_one() {
        let r = reduce_invariant(&h_61::<Q>(1).unwrap()).unwrap();
        let expect = poly(&[
            (4, 0, 1),
            (2, 2, -1),
            (2, 0, 1),
            (2, -2, -1),
            (0, 2, -1),
            (0, 0, 2),
            (0, -2, -1),
            (-2, 0, 1),
        ]);
        assert_eq!(r.polynomial, expect);
    }

    #[test]
    fn unknot_normalization_at_a_equals_q() {
        for n in 1..=2 {
            for v in [h_52::<Q>(n).unwrap(), h_61(n).unwrap(), h_twist(5, n).unwrap()] {
                let p = reduce_invariant(&v).unwrap().polynomial;
                assert!(p.substitute_a(1).is_one(), "n={n}");
            }
        }
    }

    #[test]
    fn rejects_color_zero() {
        assert!(matches!(h_52::<Q>(0), Err(Error::Precondition(_))));
        assert!(h_twist::<Q>(2, 1).is_err());
    }

    #[test]
    fn reduce_simple_fraction() {
        let num = BiLaurent::from_q(QLaurent::from_terms([(2, Q::from(1)), (-2, Q::from(-1))]));
        let v = RationalFn::from_parts(num, crate::laurent::z_poly()).unwrap();
        let r = reduce_invariant(&v).unwrap();
        assert_eq!(r.polynomial, poly(&[(0, 1, 1), (0, -1, 1)]));
        let one = reduce_invariant(&RationalFn::<Q>::one()).unwrap();
        assert!(one.polynomial.is_one());
    }

    #[test]
    fn jones_substitution() {
        let p = poly(&[(1, 1, 1)]);
        assert_eq!(jones_specialize(&p), QLaurent::monomial(3, Q::from(1)));
        assert!(jones_specialize(&BiLaurent::<Q>::one()).is_one());
    }

    #[test]
    fn whitehead_color_one() {
        let r = reduce_invariant(&h_whitehead::<Q>(1).unwrap()).unwrap();
        // clearing factor is z = q - q^{-1}
        assert_eq!(r.clearing_factor, crate::laurent::z_poly());
    }
}
