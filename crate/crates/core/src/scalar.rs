//! Scalar abstractions shared by the exact and the numeric layers.
//!
//! [`Coefficient`] is the coefficient field of the symbolic polynomials
//! (exact rationals in practice, floats for quick experiments).
//! [`Real`] is the real scalar of the root-of-unity evaluator; it is
//! implemented for every `num_traits::Float` and for the MPFR-backed
//! [`MpReal`](crate::numeric::MpReal).

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Float, FloatConst, FromPrimitive, Num, NumAssign, ToPrimitive, Zero};

/// A coefficient field for [`BiLaurent`](crate::laurent::BiLaurent).
pub trait Coefficient:
    Clone + PartialEq + fmt::Debug + Send + Sync + Num + NumAssign + Neg<Output = Self> + FromPrimitive
{
    /// Whether a division remainder may be treated as zero.
    ///
    /// Exact types answer `is_zero()`; floating types use a small absolute
    /// threshold so that exact division succeeds up to rounding.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }

    fn to_f64_lossy(&self) -> f64;

    /// The exact rational value, when one exists.
    fn to_big_rational(&self) -> Option<BigRational>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer coefficient")
    }
}

impl Coefficient for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn to_big_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Coefficient for Ratio<i64> {
    fn to_f64_lossy(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }

    fn to_big_rational(&self) -> Option<BigRational> {
        Some(BigRational::new(
            BigInt::from(*self.numer()),
            BigInt::from(*self.denom()),
        ))
    }
}

macro_rules! float_coefficient {
    ($t:ty, $eps:expr) => {
        impl Coefficient for $t {
            fn is_negligible(&self) -> bool {
                self.abs() <= $eps
            }

            fn to_f64_lossy(&self) -> f64 {
                *self as f64
            }

            fn to_big_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }
        }
    };
}

float_coefficient!(f64, 1e-9);
float_coefficient!(f32, 1e-4);

/// Real scalar used by the numeric evaluator.
///
/// Constructors take a precision in bits; fixed-width floats ignore it.
pub trait Real:
    Clone
    + Send
    + Sync
    + fmt::Debug
    + PartialOrd
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_f64_prec(prec: u32, v: f64) -> Self;
    fn from_i64_prec(prec: u32, v: i64) -> Self;
    fn from_rational_prec(prec: u32, r: &BigRational) -> Self;
    fn pi(prec: u32) -> Self;

    /// Working precision in bits.
    fn prec(&self) -> u32;

    fn sin(&self) -> Self;
    fn cos(&self) -> Self;
    fn sin_cos(&self) -> (Self, Self) {
        (self.sin(), self.cos())
    }
    fn ln(&self) -> Self;
    fn exp(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn atan2(&self, x: &Self) -> Self;

    fn is_zero(&self) -> bool;
    fn is_finite(&self) -> bool;
    fn to_f64(&self) -> f64;

    /// log2 |x|, or `-inf` for zero.
    fn log2_abs(&self) -> f64;

    /// Fixed-point decimal rendering with `digits` fractional digits.
    fn to_fixed(&self, digits: usize) -> String;

    fn zero_prec(prec: u32) -> Self {
        Self::from_i64_prec(prec, 0)
    }

    fn one_prec(prec: u32) -> Self {
        Self::from_i64_prec(prec, 1)
    }
}

impl<T> Real for T
where
    T: Float + FloatConst + FromPrimitive + Send + Sync + fmt::Debug + fmt::Display,
{
    fn from_f64_prec(_prec: u32, v: f64) -> Self {
        T::from_f64(v).expect("finite float")
    }

    fn from_i64_prec(_prec: u32, v: i64) -> Self {
        T::from_i64(v).expect("representable integer")
    }

    fn from_rational_prec(_prec: u32, r: &BigRational) -> Self {
        T::from_f64(r.to_f64().unwrap_or(f64::NAN)).expect("finite float")
    }

    fn pi(_prec: u32) -> Self {
        T::PI()
    }

    fn prec(&self) -> u32 {
        T::epsilon().log2().to_f64().map_or(53, |e| (1.0 - e) as u32)
    }

    fn sin(&self) -> Self {
        Float::sin(*self)
    }

    fn cos(&self) -> Self {
        Float::cos(*self)
    }

    fn sin_cos(&self) -> (Self, Self) {
        Float::sin_cos(*self)
    }

    fn ln(&self) -> Self {
        Float::ln(*self)
    }

    fn exp(&self) -> Self {
        Float::exp(*self)
    }

    fn sqrt(&self) -> Self {
        Float::sqrt(*self)
    }

    fn abs(&self) -> Self {
        Float::abs(*self)
    }

    fn atan2(&self, x: &Self) -> Self {
        Float::atan2(*self, *x)
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_finite(&self) -> bool {
        Float::is_finite(*self)
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn log2_abs(&self) -> f64 {
        Real::to_f64(self).abs().log2()
    }

    fn to_fixed(&self, digits: usize) -> String {
        format!("{:.*}", digits, self)
    }
}
