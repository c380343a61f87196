//! Dense univariate Laurent polynomials in q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Coefficient;

/// A Laurent polynomial `Σ c_k q^k`, stored densely from the lowest
/// nonzero exponent to the highest.
///
/// The zero polynomial has no coefficients. Otherwise the first and last
/// stored coefficients are nonzero.
#[derive(Clone, PartialEq)]
pub struct QLaurent<C> {
    low: i32,
    coeffs: Vec<C>,
}

impl<C: Coefficient> QLaurent<C> {
    pub fn zero() -> Self {
        QLaurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(e: i32, c: C) -> Self {
        Self::from_coeffs(e, vec![c])
    }

    /// `q^low * (coeffs[0] + coeffs[1] q + ...)`, trimmed.
    pub fn from_coeffs(low: i32, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let skip = coeffs.iter().take_while(|c| c.is_zero()).count();
        if skip == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..skip);
        QLaurent { low: low + skip as i32, coeffs }
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let terms: Vec<(i32, C)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Number of stored coefficients (`high - low + 1`).
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i32) -> C {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            C::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &C)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    /// `q -> q^{-1}`.
    pub fn invert(&self) -> Self {
        match self.high_degree() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                QLaurent { low: -hi, coeffs }
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    fn add_scaled_into(&self, other: &Self, sign: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { other.clone() } else { -other };
        }
        let lo = self.low.min(other.low);
        let hi = self.high_degree().unwrap().max(other.high_degree().unwrap());
        let mut coeffs = vec![C::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - lo) as usize + k];
            if sign {
                *slot += c.clone();
            } else {
                *slot -= c.clone();
            }
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Exact division. Returns `None` when `d` is zero or does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = self.coeffs.len();
        let m = d.coeffs.len();
        if n < m {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let qlen = n - m + 1;
        let mut quot = vec![C::zero(); qlen];
        let lead = d.coeffs[m - 1].clone();
        for k in (0..qlen).rev() {
            let c = rem[k + m - 1].clone() / lead.clone();
            if !c.is_zero() {
                for j in 0..m {
                    rem[k + j] -= c.clone() * d.coeffs[j].clone();
                }
            }
            quot[k] = c;
        }
        if rem[..m - 1].iter().all(|c| c.is_negligible()) {
            Some(Self::from_coeffs(self.low - d.low, quot))
        } else {
            None
        }
    }

    /// Substitutes `q = x` given the coefficient embedding `f`.
    pub fn eval_with<T, F>(&self, x: &T, x_inv: &T, one: T, f: F) -> T
    where
        T: Clone + Add<Output = T> + Mul<Output = T>,
        F: Fn(&C) -> T,
    {
        let mut acc: Option<T> = None;
        let mut pw = power(x, x_inv, one.clone(), self.low);
        for c in &self.coeffs {
            if !c.is_zero() {
                let t = f(c) * pw.clone();
                acc = Some(match acc {
                    None => t,
                    Some(a) => a + t,
                });
            }
            pw = pw * x.clone();
        }
        acc.unwrap_or_else(|| f(&C::zero()))
    }
}

fn power<T: Clone + Mul<Output = T>>(x: &T, x_inv: &T, one: T, e: i32) -> T {
    let base = if e < 0 { x_inv } else { x };
    let mut out = one;
    for _ in 0..e.unsigned_abs() {
        out = out * base.clone();
    }
    out
}

impl<C: Coefficient> Default for QLaurent<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: fmt::Debug + num_traits::Zero> fmt::Debug for QLaurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms = self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        for (e, c) in terms.map(|(k, c)| (self.low + k as i32, c)) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})q^{}", c, e)?;
        }
        Ok(())
    }
}

impl<'a, C: Coefficient> Add<&'a QLaurent<C>> for &'a QLaurent<C> {
    type Output = QLaurent<C>;
    fn add(self, rhs: &'a QLaurent<C>) -> QLaurent<C> {
        self.add_scaled_into(rhs, true)
    }
}

impl<'a, C: Coefficient> Sub<&'a QLaurent<C>> for &'a QLaurent<C> {
    type Output = QLaurent<C>;
    fn sub(self, rhs: &'a QLaurent<C>) -> QLaurent<C> {
        self.add_scaled_into(rhs, false)
    }
}

impl<'a, C: Coefficient> Mul<&'a QLaurent<C>> for &'a QLaurent<C> {
    type Output = QLaurent<C>;
    fn mul(self, rhs: &'a QLaurent<C>) -> QLaurent<C> {
        if self.is_zero() || rhs.is_zero() {
            return QLaurent::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    coeffs[i + j] += x.clone() * y.clone();
                }
            }
        }
        QLaurent::from_coeffs(self.low + rhs.low, coeffs)
    }
}

impl<C: Coefficient> Neg for &QLaurent<C> {
    type Output = QLaurent<C>;
    fn neg(self) -> QLaurent<C> {
        QLaurent {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coefficient> Neg for QLaurent<C> {
    type Output = QLaurent<C>;
    fn neg(self) -> QLaurent<C> {
        -&self
    }
}

macro_rules! forward_owned {
    ($ty:ident, $tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr<$ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: $ty<C>) -> $ty<C> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<&'a $ty<C>> for $ty<C> {
            type Output = $ty<C>;
            fn $m(self, rhs: &'a $ty<C>) -> $ty<C> {
                (&self).$m(rhs)
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(QLaurent, Add, add);
forward_owned!(QLaurent, Sub, sub);
forward_owned!(QLaurent, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type P = QLaurent<Ratio<i64>>;

    fn p(low: i32, c: &[i64]) -> P {
        P::from_coeffs(low, c.iter().map(|&x| Ratio::from_integer(x)).collect())
    }

    #[test]
    fn trims_both_ends() {
        let x = p(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(x.low_degree(), Some(0));
        assert_eq!(x.high_degree(), Some(1));
        assert!(p(3, &[0, 0]).is_zero());
    }

    #[test]
    fn division_round_trip() {
        let a = p(-1, &[1, 0, -1]);
        let b = p(0, &[2, 1, 1, 5]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert!(b.div_exact(&a).is_none());
    }

    #[test]
    fn invert_reverses() {
        let a = p(-1, &[1, 2, 3]);
        assert_eq!(a.invert(), p(-1, &[3, 2, 1]));
    }
}
