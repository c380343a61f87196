//! Quotients of a bivariate Laurent polynomial by a polynomial in q.

use std::ops::{Add, Mul, Neg, Sub};

use super::bi::BiLaurent;
use super::cyclotomic::{common_multiple, cyclotomic, factor};
use super::uni::{forward_owned, QLaurent};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// `num / den` with `den` depending on `q` only.
///
/// The denominator is kept normalized: lowest exponent zero and leading
/// coefficient one. Fractions are not reduced automatically; see
/// [`RationalFn::reduced`].
#[derive(Clone)]
pub struct RationalFn<C> {
    num: BiLaurent<C>,
    den: QLaurent<C>,
}

impl<C: Coefficient> RationalFn<C> {
    /// Fails if `den` is zero or involves `a`.
    pub fn new(num: BiLaurent<C>, den: BiLaurent<C>) -> Result<Self> {
        let den = den.as_q_only().ok_or(Error::NonQDenominator)?;
        Self::from_parts(num, den)
    }

    pub fn from_parts(num: BiLaurent<C>, den: QLaurent<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::VanishingDenominator("zero denominator".into()));
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BiLaurent<C>, den: QLaurent<C>) -> Self {
        let lo = den.low_degree().unwrap();
        let lead = den.leading_coeff().unwrap().clone();
        if lo == 0 && lead.is_one() {
            return RationalFn { num, den };
        }
        let inv = C::one() / lead;
        RationalFn {
            num: num.shift(0, -lo).scale(&inv),
            den: den.shift(-lo).scale(&inv),
        }
    }

    pub fn from_poly(num: BiLaurent<C>) -> Self {
        RationalFn { num, den: QLaurent::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(BiLaurent::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BiLaurent::one())
    }

    pub fn num(&self) -> &BiLaurent<C> {
        &self.num
    }

    pub fn den(&self) -> &QLaurent<C> {
        &self.den
    }

    pub fn into_parts(self) -> (BiLaurent<C>, QLaurent<C>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divides by a nonzero polynomial in `q`.
    pub fn div_q(&self, d: &QLaurent<C>) -> Result<Self> {
        Self::from_parts(self.num.clone(), &self.den * d)
    }

    pub fn mul_poly(&self, p: &BiLaurent<C>) -> Self {
        RationalFn { num: &self.num * p, den: self.den.clone() }
    }

    pub fn pow(&self, k: u32) -> Self {
        RationalFn { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// The substitution `a -> a^{-1}`, `q -> q^{-1}`.
    pub fn invert_vars(&self) -> Self {
        Self::normalized(self.num.invert_vars(), self.den.invert())
    }

    /// Cancels every common factor of numerator and denominator.
    ///
    /// Denominators built from quantum integers factor into cyclotomic
    /// polynomials, so cancelling those factors gives lowest terms. Other
    /// denominators are returned unchanged.
    pub fn reduced(&self) -> Self {
        if self.den.is_one() || self.num.is_zero() {
            return if self.num.is_zero() { Self::zero() } else { self.clone() };
        }
        let Some(f) = factor(&self.den) else {
            return self.clone();
        };
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        for (&d, &e) in &f.factors {
            let phi = cyclotomic::<C>(d);
            for _ in 0..e {
                match num.div_exact_q(&phi) {
                    Ok(n) => {
                        num = n;
                        den = den.div_exact(&phi).expect("factor of the denominator");
                    }
                    Err(_) => break,
                }
            }
        }
        Self::normalized(num, den)
    }

    /// The fraction as a Laurent polynomial, when the division is exact.
    pub fn to_polynomial(&self) -> Result<BiLaurent<C>> {
        self.num.div_exact_q(&self.den)
    }

    /// Sums many fractions, merging denominators pairwise in a balanced tree.
    pub fn sum<I: IntoIterator<Item = Self>>(items: I) -> Self {
        let mut layer: Vec<Self> = items.into_iter().filter(|x| !x.is_zero()).collect();
        if layer.is_empty() {
            return Self::zero();
        }
        while layer.len() > 1 {
            let mut next = Vec::with_capacity(layer.len().div_ceil(2));
            let mut it = layer.into_iter();
            while let Some(x) = it.next() {
                next.push(match it.next() {
                    Some(y) => &x + &y,
                    None => x,
                });
            }
            layer = next;
        }
        layer.pop().unwrap()
    }
}

impl<C: std::fmt::Debug + num_traits::Zero> std::fmt::Debug for RationalFn<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

impl<C: Coefficient> PartialEq for RationalFn<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul_q(&other.den) == other.num.mul_q(&self.den)
    }
}

impl<C: Coefficient> From<BiLaurent<C>> for RationalFn<C> {
    fn from(p: BiLaurent<C>) -> Self {
        Self::from_poly(p)
    }
}

impl<'a, C: Coefficient> Add<&'a RationalFn<C>> for &'a RationalFn<C> {
    type Output = RationalFn<C>;
    fn add(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let (den, m1, m2) = common_multiple(&self.den, &rhs.den);
        let num = &self.num.mul_q(&m1) + &rhs.num.mul_q(&m2);
        RationalFn::normalized(num, den)
    }
}

impl<'a, C: Coefficient> Sub<&'a RationalFn<C>> for &'a RationalFn<C> {
    type Output = RationalFn<C>;
    fn sub(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        self + &(-rhs)
    }
}

impl<'a, C: Coefficient> Mul<&'a RationalFn<C>> for &'a RationalFn<C> {
    type Output = RationalFn<C>;
    fn mul(self, rhs: &'a RationalFn<C>) -> RationalFn<C> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        RationalFn { num: &self.num * &rhs.num, den: &self.den * &rhs.den }
    }
}

impl<C: Coefficient> Neg for &RationalFn<C> {
    type Output = RationalFn<C>;
    fn neg(self) -> RationalFn<C> {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl<C: Coefficient> Neg for RationalFn<C> {
    type Output = RationalFn<C>;
    fn neg(self) -> RationalFn<C> {
        -&self
    }
}

forward_owned!(RationalFn, Add, add);
forward_owned!(RationalFn, Sub, sub);
forward_owned!(RationalFn, Mul, mul);
