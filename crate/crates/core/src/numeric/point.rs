//! Evaluation points `q = e^{iθ}`, `a = q^M` with `θ = π/(M+N-2)` and the
//! per-point lookup tables.

use num_integer::Integer;
use num_rational::Ratio;

use super::complex::Cplx;
use crate::error::{precondition, Error, Result};
use crate::scalar::Real;

/// The point `θ = π/(M+N-2)`, `q = e^{iθ}`, `a = q^M`, color `N - 1`.
///
/// `M` is stored in lowest terms, so `(2p, 2q)` and `(p, q)` give the same
/// point. Every phase that occurs is a multiple of `π / (2D)` with
/// `D = M_num + (N-2) M_den`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalPoint {
    m: Ratio<i64>,
    big_n: u32,
    precision: u32,
    conjugate: bool,
}

impl EvalPoint {
    pub fn new(m: Ratio<i64>, big_n: u32, precision: u32) -> Result<Self> {
        if big_n < 2 {
            return precondition(format!("N must be at least 2 (got {big_n})"));
        }
        if precision < 16 {
            return precondition(format!("precision must be at least 16 bits (got {precision})"));
        }
        let pt = EvalPoint { m, big_n, precision, conjugate: false };
        if pt.d() <= 0 {
            return precondition(format!("M + N - 2 must be positive (M = {m}, N = {big_n})"));
        }
        Ok(pt)
    }

    pub fn from_parts(m_num: i64, m_den: i64, big_n: u32, precision: u32) -> Result<Self> {
        if m_den == 0 {
            return precondition("M has zero denominator");
        }
        Self::new(Ratio::new(m_num, m_den), big_n, precision)
    }

    pub fn m(&self) -> Ratio<i64> {
        self.m
    }

    pub fn m_num(&self) -> i64 {
        *self.m.numer()
    }

    pub fn m_den(&self) -> i64 {
        *self.m.denom()
    }

    pub fn big_n(&self) -> u32 {
        self.big_n
    }

    /// The color n = N - 1.
    pub fn color(&self) -> i64 {
        self.big_n as i64 - 1
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_conjugate(&self) -> bool {
        self.conjugate
    }

    pub fn with_precision(&self, precision: u32) -> Self {
        EvalPoint { precision, ..self.clone() }
    }

    /// The point with θ replaced by -θ.
    pub fn conjugated(&self) -> Self {
        EvalPoint { conjugate: !self.conjugate, ..self.clone() }
    }

    /// `D = M_num + (N-2) M_den`, so that `θ = π M_den / D`.
    pub fn d(&self) -> i64 {
        self.m_num() + (self.big_n as i64 - 2) * self.m_den()
    }

    pub fn theta<R: Real>(&self) -> R {
        let t = R::pi(self.precision) * R::from_i64_prec(self.precision, self.m_den())
            / R::from_i64_prec(self.precision, self.d());
        if self.conjugate {
            -t
        } else {
            t
        }
    }

    /// Whether `[k]` vanishes: `k θ` is a multiple of π.
    pub fn qint_is_zero(&self, k: i64) -> bool {
        (k * self.m_den()).is_multiple_of(&self.d())
    }

    /// Whether `[k;a]` vanishes: `M + k` is a multiple of `M + N - 2`.
    pub fn framed_is_zero(&self, k: i64) -> bool {
        (self.m_num() + k * self.m_den()).is_multiple_of(&self.d())
    }

    /// Phase index of `a^x q^y`, in units of `π / (2D)`.
    pub(crate) fn monomial_index(&self, x: i64, y: i64) -> i64 {
        2 * (self.m_num() * x + self.m_den() * y)
    }
}

/// `e^{i π k / (2D)}` for all k, built from the first quadrant.
pub(crate) struct PhaseTable<R> {
    d: i64,
    quarter: Vec<(R, R)>,
    conjugate: bool,
}

const RESYNC: i64 = 32;

impl<R: Real> PhaseTable<R> {
    pub fn new(pt: &EvalPoint) -> Self {
        let prec = pt.precision();
        let d = pt.d();
        let unit = R::pi(prec) / R::from_i64_prec(prec, 2 * d);
        let (s1, c1) = unit.sin_cos();
        let mut quarter: Vec<(R, R)> = Vec::with_capacity(d as usize + 1);
        for k in 0..=d {
            if k % RESYNC == 0 {
                let (s, c) = (unit.clone() * R::from_i64_prec(prec, k)).sin_cos();
                quarter.push((c, s));
            } else {
                let (c0, s0) = quarter[k as usize - 1].clone();
                let c = c0.clone() * c1.clone() - s0.clone() * s1.clone();
                let s = s0 * c1.clone() + c0 * s1.clone();
                quarter.push((c, s));
            }
        }
        // exact endpoints
        quarter[0] = (R::one_prec(prec), R::zero_prec(prec));
        quarter[d as usize] = (R::zero_prec(prec), R::one_prec(prec));
        PhaseTable { d, quarter, conjugate: pt.is_conjugate() }
    }

    fn cos_sin(&self, idx: i64) -> (R, R) {
        let r = idx.rem_euclid(4 * self.d);
        let (quadrant, off) = (r / self.d, (r % self.d) as usize);
        let (c, s) = self.quarter[off].clone();
        match quadrant {
            0 => (c, s),
            1 => (-s, c),
            2 => (-c, -s),
            _ => (s, -c),
        }
    }

    /// `sin(π idx / (2D))` at the unconjugated point.
    pub fn sin(&self, idx: i64) -> R {
        self.cos_sin(idx).1
    }

    /// `e^{± i π idx / (2D)}`, the sign following the point's orientation.
    pub fn cis(&self, idx: i64) -> Cplx<R> {
        let (c, s) = self.cos_sin(idx);
        Cplx::new(c, if self.conjugate { -s } else { s })
    }
}

/// Quantum-integer tables for one point.
pub(crate) struct Tables<R> {
    pub pt: EvalPoint,
    pub phases: PhaseTable<R>,
    /// `[k;a]`, k = 0..=kmax.
    pub framed: Vec<R>,
    pub framed_zero: Vec<bool>,
    /// `[k]!`, k = 0..=n.
    pub fact: Vec<R>,
    /// Product of the nonzero `[t;a]` for t <= k, and the number of zero ones.
    pub framed_prefix: Vec<R>,
    pub framed_prefix_zeros: Vec<u32>,
    /// `(2 sin θ)^k`, k = 0..=n.
    pub z_pow: Vec<R>,
}

impl<R: Real> Tables<R> {
    pub fn new(pt: &EvalPoint, kmax: usize) -> Result<Self> {
        let prec = pt.precision();
        let n = pt.color();
        let phases = PhaseTable::<R>::new(pt);
        let (mn, md) = (pt.m_num(), pt.m_den());
        let sin_theta = phases.sin(2 * md);
        let mut qint = Vec::with_capacity(kmax + 1);
        let mut framed = Vec::with_capacity(kmax + 1);
        let mut framed_zero = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax as i64 {
            qint.push(if pt.qint_is_zero(k) {
                R::zero_prec(prec)
            } else {
                phases.sin(2 * k * md) / sin_theta.clone()
            });
            let zero = pt.framed_is_zero(k);
            framed_zero.push(zero);
            framed.push(if zero {
                R::zero_prec(prec)
            } else {
                phases.sin(2 * (mn + k * md)) / sin_theta.clone()
            });
        }
        if let Some(t) = (1..=n).find(|&t| pt.qint_is_zero(t)) {
            return Err(Error::VanishingDenominator(format!(
                "[{t}] vanishes at M = {}, N = {}",
                pt.m(),
                pt.big_n()
            )));
        }
        let mut fact = vec![R::one_prec(prec)];
        for t in 1..=n as usize {
            let v = fact[t - 1].clone() * qint[t].clone();
            fact.push(v);
        }
        let mut framed_prefix = Vec::with_capacity(kmax + 1);
        let mut framed_prefix_zeros = Vec::with_capacity(kmax + 1);
        let (mut p, mut zc) = (R::one_prec(prec), 0u32);
        for k in 0..=kmax {
            if framed_zero[k] {
                zc += 1;
            } else {
                p = p * framed[k].clone();
            }
            framed_prefix.push(p.clone());
            framed_prefix_zeros.push(zc);
        }
        let two_sin = R::from_i64_prec(prec, 2) * sin_theta;
        let mut z_pow = vec![R::one_prec(prec)];
        for k in 1..=n.max(0) as usize {
            let v = z_pow[k - 1].clone() * two_sin.clone();
            z_pow.push(v);
        }
        Ok(Tables {
            pt: pt.clone(),
            phases,
            framed,
            framed_zero,
            fact,
            framed_prefix,
            framed_prefix_zeros,
            z_pow,
        })
    }

    /// `[hi;a][hi-1;a]...[lo;a]`, or `None` if a factor vanishes exactly.
    /// The empty range gives 1.
    pub fn framed_range(&self, lo: i64, hi: i64) -> Option<R> {
        let prec = self.pt.precision();
        if hi < lo {
            return Some(R::one_prec(prec));
        }
        let (lo, hi) = (lo as usize, hi as usize);
        let zeros_below = if lo == 0 { 0 } else { self.framed_prefix_zeros[lo - 1] };
        if self.framed_prefix_zeros[hi] > zeros_below {
            return None;
        }
        let below = if lo == 0 { R::one_prec(prec) } else { self.framed_prefix[lo - 1].clone() };
        Some(self.framed_prefix[hi].clone() / below)
    }

    /// Symmetric Gaussian binomial `[m]! / ([k]! [m-k]!)`.
    pub fn binom(&self, m: i64, k: i64) -> R {
        self.fact[m as usize].clone()
            / (self.fact[k as usize].clone() * self.fact[(m - k) as usize].clone())
    }

    /// `[m][m-1]...[m-k+1]`.
    pub fn falling(&self, m: i64, k: i64) -> R {
        self.fact[m as usize].clone() / self.fact[(m - k) as usize].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_points() {
        assert!(EvalPoint::from_parts(2, 1, 1, 64).is_err());
        assert!(EvalPoint::from_parts(-1, 1, 2, 64).is_err());
        assert!(EvalPoint::from_parts(1, 0, 5, 64).is_err());
    }

    #[test]
    fn representation_is_normalized() {
        let a = EvalPoint::from_parts(26, 20, 10, 64).unwrap();
        let b = EvalPoint::from_parts(13, 10, 10, 64).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.d(), 13 + 8 * 10);
    }

    #[test]
    fn zero_flags_are_arithmetic() {
        let pt = EvalPoint::from_parts(13, 10, 7, 64).unwrap();
        assert!(pt.framed_is_zero(5));
        assert!(!pt.framed_is_zero(4));
        assert!(!pt.qint_is_zero(6));
    }

    #[test]
    fn phase_table_matches_direct() {
        let pt = EvalPoint::from_parts(7, 3, 40, 53).unwrap();
        let t = PhaseTable::<f64>::new(&pt);
        let d = pt.d();
        for idx in [-3, 0, 1, 37, d, 2 * d + 5, 4 * d - 1, 9 * d + 2] {
            let ang = std::f64::consts::PI * idx as f64 / (2 * d) as f64;
            let c = t.cis(idx);
            assert!((c.re - ang.cos()).abs() < 1e-13 && (c.im - ang.sin()).abs() < 1e-13);
        }
    }
}
