//! Complex numbers over any [`Real`].

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct Cplx<R> {
    pub re: R,
    pub im: R,
}

impl<R: Real> Cplx<R> {
    pub fn new(re: R, im: R) -> Self {
        Cplx { re, im }
    }

    pub fn zero(prec: u32) -> Self {
        Cplx { re: R::zero_prec(prec), im: R::zero_prec(prec) }
    }

    pub fn one(prec: u32) -> Self {
        Cplx { re: R::one_prec(prec), im: R::zero_prec(prec) }
    }

    pub fn from_real(re: R) -> Self {
        let im = R::zero_prec(re.prec());
        Cplx { re, im }
    }

    /// `e^{i angle}`.
    pub fn cis(angle: &R) -> Self {
        let (s, c) = angle.sin_cos();
        Cplx { re: c, im: s }
    }

    pub fn conj(&self) -> Self {
        Cplx { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn scale(&self, k: &R) -> Self {
        Cplx { re: self.re.clone() * k.clone(), im: self.im.clone() * k.clone() }
    }

    pub fn norm_sqr(&self) -> R {
        self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone()
    }

    pub fn abs(&self) -> R {
        self.norm_sqr().sqrt()
    }

    /// Principal argument in (-π, π].
    pub fn arg(&self) -> R {
        self.im.atan2(&self.re)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        Cplx { re: self.abs().ln(), im: self.arg() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    /// log2 of the larger component magnitude.
    pub fn log2_abs(&self) -> f64 {
        self.re.log2_abs().max(self.im.log2_abs())
    }

    /// Relative distance |self - other| / max(|self|, |other|); 0 when both vanish.
    pub fn rel_diff(&self, other: &Self) -> f64 {
        let d = (self.clone() - other.clone()).abs().to_f64();
        let s = self.abs().to_f64().max(other.abs().to_f64());
        if s == 0.0 {
            d
        } else {
            d / s
        }
    }
}

impl<R: Real> Add for Cplx<R> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Cplx { re: self.re + r.re, im: self.im + r.im }
    }
}

impl<R: Real> Sub for Cplx<R> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Cplx { re: self.re - r.re, im: self.im - r.im }
    }
}

impl<R: Real> Mul for Cplx<R> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let re = self.re.clone() * r.re.clone() - self.im.clone() * r.im.clone();
        let im = self.re * r.im + self.im * r.re;
        Cplx { re, im }
    }
}

impl<R: Real> Div for Cplx<R> {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        let d = r.norm_sqr();
        let n = self * r.conj();
        Cplx { re: n.re / d.clone(), im: n.im / d }
    }
}

impl<R: Real> Neg for Cplx<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Cplx { re: -self.re, im: -self.im }
    }
}
