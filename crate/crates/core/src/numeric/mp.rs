//! MPFR-backed real scalar.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer};

use crate::scalar::Real;

/// A multiprecision real. Arithmetic keeps the precision of the left operand.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct MpReal(pub Float);

impl MpReal {
    pub fn inner(&self) -> &Float {
        &self.0
    }
}

impl fmt::Debug for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.to_string_radix(10, Some(24)))
    }
}

impl fmt::Display for MpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr for MpReal {
            type Output = MpReal;
            fn $m(self, rhs: MpReal) -> MpReal {
                MpReal($tr::$m(self.0, rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for MpReal {
    type Output = MpReal;
    fn neg(self) -> MpReal {
        MpReal(-self.0)
    }
}

fn big_to_integer(x: &num_bigint::BigInt) -> Integer {
    Integer::from_str_radix(&x.to_str_radix(16), 16).expect("hex integer")
}

impl Real for MpReal {
    fn from_f64_prec(prec: u32, v: f64) -> Self {
        MpReal(Float::with_val(prec, v))
    }

    fn from_i64_prec(prec: u32, v: i64) -> Self {
        MpReal(Float::with_val(prec, v))
    }

    fn from_rational_prec(prec: u32, r: &BigRational) -> Self {
        let n = Float::with_val(prec, big_to_integer(r.numer()));
        let d = Float::with_val(prec, big_to_integer(r.denom()));
        MpReal(n / d)
    }

    fn pi(prec: u32) -> Self {
        MpReal(Float::with_val(prec, Constant::Pi))
    }

    fn prec(&self) -> u32 {
        self.0.prec()
    }

    fn sin(&self) -> Self {
        MpReal(self.0.clone().sin())
    }

    fn cos(&self) -> Self {
        MpReal(self.0.clone().cos())
    }

    fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (MpReal(s), MpReal(c))
    }

    fn ln(&self) -> Self {
        MpReal(self.0.clone().ln())
    }

    fn exp(&self) -> Self {
        MpReal(self.0.clone().exp())
    }

    fn sqrt(&self) -> Self {
        MpReal(self.0.clone().sqrt())
    }

    fn abs(&self) -> Self {
        MpReal(self.0.clone().abs())
    }

    fn atan2(&self, x: &Self) -> Self {
        MpReal(self.0.clone().atan2(&x.0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn log2_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        self.0.clone().abs().log2().to_f64()
    }

    fn to_fixed(&self, digits: usize) -> String {
        let scale = Integer::from(10).pow(digits as u32);
        let scaled = Float::with_val(self.0.prec() + 64, &self.0 * &scale);
        let Some(i) = scaled.to_integer() else {
            return self.0.to_string();
        };
        let neg = i < 0;
        let mut s = i.abs().to_string();
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        let (whole, frac) = s.split_at(s.len() - digits);
        let body = if digits == 0 { whole.to_string() } else { format!("{whole}.{frac}") };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}
