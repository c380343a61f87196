//! Laurent polynomials in two variables `a` and `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::uni::{forward_owned, QLaurent};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A Laurent polynomial `Σ c_{i,j} a^i q^j`.
///
/// Terms are grouped by the power of `a`; each group is a dense
/// [`QLaurent`]. Only nonzero groups are kept, so two equal polynomials
/// always have identical representations.
#[derive(Clone, PartialEq)]
pub struct BiLaurent<C> {
    slices: BTreeMap<i32, QLaurent<C>>,
}

impl<C: Coefficient> BiLaurent<C> {
    pub fn zero() -> Self {
        BiLaurent { slices: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `c a^ea q^eq`.
    pub fn monomial(ea: i32, eq: i32, c: C) -> Self {
        Self::from_slice(ea, QLaurent::monomial(eq, c))
    }

    /// `a^ea * p(q)`.
    pub fn from_slice(ea: i32, p: QLaurent<C>) -> Self {
        let mut slices = BTreeMap::new();
        if !p.is_zero() {
            slices.insert(ea, p);
        }
        BiLaurent { slices }
    }

    pub fn from_q(p: QLaurent<C>) -> Self {
        Self::from_slice(0, p)
    }

    /// Builds from `(e_a, e_q, c)` triples; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, i32, C)>>(terms: I) -> Self {
        let mut grouped: BTreeMap<i32, Vec<(i32, C)>> = BTreeMap::new();
        for (ea, eq, c) in terms {
            grouped.entry(ea).or_default().push((eq, c));
        }
        let slices = grouped
            .into_iter()
            .map(|(ea, ts)| (ea, QLaurent::from_terms(ts)))
            .filter(|(_, p)| !p.is_zero())
            .collect();
        BiLaurent { slices }
    }

    pub fn is_zero(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.slices.len() == 1 && self.slices.get(&0).is_some_and(|p| p.is_one())
    }

    pub fn coeff(&self, ea: i32, eq: i32) -> C {
        self.slices.get(&ea).map_or_else(C::zero, |p| p.coeff(eq))
    }

    /// Nonzero terms `(e_a, e_q, c)` in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &C)> + '_ {
        self.slices
            .iter()
            .flat_map(|(&ea, p)| p.terms().map(move |(eq, c)| (ea, eq, c)))
    }

    pub fn term_count(&self) -> usize {
        self.slices.values().map(|p| p.term_count()).sum()
    }

    /// The coefficient of `a^ea`, as a polynomial in `q`.
    pub fn slice(&self, ea: i32) -> Option<&QLaurent<C>> {
        self.slices.get(&ea)
    }

    pub fn slices(&self) -> impl Iterator<Item = (i32, &QLaurent<C>)> + '_ {
        self.slices.iter().map(|(&ea, p)| (ea, p))
    }

    /// Range of `a` exponents.
    pub fn a_range(&self) -> Option<(i32, i32)> {
        Some((*self.slices.keys().next()?, *self.slices.keys().next_back()?))
    }

    /// Range of `q` exponents.
    pub fn q_range(&self) -> Option<(i32, i32)> {
        let lo = self.slices.values().filter_map(|p| p.low_degree()).min()?;
        let hi = self.slices.values().filter_map(|p| p.high_degree()).max()?;
        Some((lo, hi))
    }

    /// The polynomial as a function of `q` alone, if no power of `a` occurs.
    pub fn as_q_only(&self) -> Option<QLaurent<C>> {
        match self.slices.len() {
            0 => Some(QLaurent::zero()),
            1 => self.slices.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_slices(|p| p.scale(c))
    }

    /// Multiplies by `a^ea q^eq`.
    pub fn shift(&self, ea: i32, eq: i32) -> Self {
        BiLaurent {
            slices: self.slices.iter().map(|(&k, p)| (k + ea, p.shift(eq))).collect(),
        }
    }

    /// Multiplies by a polynomial in `q`.
    pub fn mul_q(&self, p: &QLaurent<C>) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        self.map_slices(|s| s * p)
    }

    fn map_slices<F: Fn(&QLaurent<C>) -> QLaurent<C>>(&self, f: F) -> Self {
        BiLaurent {
            slices: self
                .slices
                .iter()
                .map(|(&k, p)| (k, f(p)))
                .filter(|(_, p)| !p.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// The substitution `a -> a^{-1}`, `q -> q^{-1}`.
    pub fn invert_vars(&self) -> Self {
        BiLaurent {
            slices: self.slices.iter().map(|(&k, p)| (-k, p.invert())).collect(),
        }
    }

    /// Substitutes `a = q^k`, giving a polynomial in `q`.
    pub fn substitute_a(&self, k: i32) -> QLaurent<C> {
        self.slices
            .iter()
            .fold(QLaurent::zero(), |acc, (&ea, p)| &acc + &p.shift(ea * k))
    }

    /// Exact division by a polynomial in `q`.
    pub fn div_exact_q(&self, d: &QLaurent<C>) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::VanishingDenominator("division by the zero polynomial".into()));
        }
        let mut slices = BTreeMap::new();
        for (&ea, p) in &self.slices {
            let q = p.div_exact(d).ok_or(Error::NonDivisible { a_degree: ea })?;
            slices.insert(ea, q);
        }
        Ok(BiLaurent { slices })
    }

    /// Exact division; fails with [`Error::NonDivisible`] when `d` does not
    /// divide `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if let Some(dq) = d.as_q_only() {
            return self.div_exact_q(&dq);
        }
        // long division in decreasing powers of a
        let (dlo, dhi) = d.a_range().unwrap();
        let lead = &d.slices[&dhi];
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((rlo, rhi)) = rem.a_range() {
            if rhi - rlo < dhi - dlo {
                return Err(Error::NonDivisible { a_degree: rhi });
            }
            let c = rem.slices[&rhi]
                .div_exact(lead)
                .ok_or(Error::NonDivisible { a_degree: rhi })?;
            let term = BiLaurent::from_slice(rhi - dhi, c.clone());
            rem = &rem - &(&term * d);
            quot.insert(rhi - dhi, c);
        }
        Ok(BiLaurent { slices: quot })
    }

    /// Substitutes values for `a` and `q` in any commutative ring `T`.
    pub fn eval_with<T, F>(&self, a: &T, a_inv: &T, q: &T, q_inv: &T, one: T, zero: T, f: F) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
        F: Fn(&C) -> T,
    {
        let mut acc = zero.clone();
        for (&ea, p) in &self.slices {
            let base = if ea < 0 { a_inv } else { a };
            let mut pw = one.clone();
            for _ in 0..ea.unsigned_abs() {
                pw = pw * base.clone();
            }
            acc = acc + pw * p.eval_with(q, q_inv, one.clone(), &f);
        }
        acc
    }
}

impl<C: Coefficient> Default for BiLaurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> From<QLaurent<C>> for BiLaurent<C> {
    fn from(p: QLaurent<C>) -> Self {
        Self::from_q(p)
    }
}

impl<C: fmt::Debug + num_traits::Zero> fmt::Debug for BiLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.slices.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (ea, p) in &self.slices {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "a^{}({:?})", ea, p)?;
        }
        Ok(())
    }
}

impl<'a, C: Coefficient> Add<&'a BiLaurent<C>> for &'a BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn add(self, rhs: &'a BiLaurent<C>) -> BiLaurent<C> {
        let mut slices = self.slices.clone();
        for (&ea, p) in &rhs.slices {
            let s = match slices.remove(&ea) {
                Some(x) => &x + p,
                None => p.clone(),
            };
            if !s.is_zero() {
                slices.insert(ea, s);
            }
        }
        BiLaurent { slices }
    }
}

impl<'a, C: Coefficient> Sub<&'a BiLaurent<C>> for &'a BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn sub(self, rhs: &'a BiLaurent<C>) -> BiLaurent<C> {
        self + &(-rhs)
    }
}

impl<'a, C: Coefficient> Mul<&'a BiLaurent<C>> for &'a BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn mul(self, rhs: &'a BiLaurent<C>) -> BiLaurent<C> {
        let mut slices: BTreeMap<i32, QLaurent<C>> = BTreeMap::new();
        for (&ea, p) in &self.slices {
            for (&eb, r) in &rhs.slices {
                let prod = p * r;
                let e = slices.entry(ea + eb).or_default();
                *e = &*e + &prod;
            }
        }
        slices.retain(|_, p| !p.is_zero());
        BiLaurent { slices }
    }
}

impl<C: Coefficient> Neg for &BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn neg(self) -> BiLaurent<C> {
        BiLaurent {
            slices: self.slices.iter().map(|(&k, p)| (k, -p)).collect(),
        }
    }
}

impl<C: Coefficient> Neg for BiLaurent<C> {
    type Output = BiLaurent<C>;
    fn neg(self) -> BiLaurent<C> {
        -&self
    }
}

forward_owned!(BiLaurent, Add, add);
forward_owned!(BiLaurent, Sub, sub);
forward_owned!(BiLaurent, Mul, mul);
