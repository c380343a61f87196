//! Evaluation at `q = e^{iπ/(M+N-2)}`, `a = q^M`.

mod complex;
mod eval;
mod mp;
mod point;

use num_rational::{BigRational, Ratio};

pub use complex::Cplx;
pub use eval::{
    eval_framed, eval_invariant, eval_qint, eval_triple_sum, fig8_sine, Evaluation, FramedValue,
};
pub use mp::MpReal;
pub use point::EvalPoint;

use crate::error::{Error, Result};
use crate::invariants::KnotId;
use crate::laurent::RationalFn;
use crate::scalar::Real;
use point::PhaseTable;

/// Escalation stops above this many bits.
pub const MAX_PRECISION: u32 = 1 << 18;

/// Two successive precisions must agree to this relative tolerance.
pub const AGREEMENT: f64 = 1e-12;

pub fn default_precision(big_n: u32) -> u32 {
    (16 * big_n).max(256)
}

/// Evaluates with doubling precision until two successive results agree.
///
/// Starts from `start` bits, or [`default_precision`] when `None`.
pub fn evaluate(
    knot: KnotId,
    m: Ratio<i64>,
    big_n: u32,
    start: Option<u32>,
) -> Result<Evaluation<MpReal>> {
    let mut prec = start.unwrap_or_else(|| default_precision(big_n));
    let base = EvalPoint::new(m, big_n, prec)?;
    let mut prev = eval_invariant::<MpReal>(knot, &base)?;
    loop {
        let next_prec = prec.saturating_mul(2);
        if next_prec > MAX_PRECISION {
            return Err(Error::PrecisionExhausted { bits: prec, largest_log2: prev.largest_log2 });
        }
        let cur = eval_invariant::<MpReal>(knot, &base.with_precision(next_prec))?;
        if cur.value.rel_diff(&prev.value) < AGREEMENT {
            return Ok(cur);
        }
        prev = cur;
        prec = next_prec;
    }
}

/// Substitutes the point into an exact rational function.
pub fn eval_rational<R: Real>(v: &RationalFn<BigRational>, pt: &EvalPoint) -> Result<Cplx<R>> {
    let prec = pt.precision();
    let phases = PhaseTable::<R>::new(pt);
    let term = |ea: i32, eq: i32, c: &BigRational| {
        phases
            .cis(pt.monomial_index(ea as i64, eq as i64))
            .scale(&R::from_rational_prec(prec, c))
    };
    let num = v.num().terms().fold(Cplx::zero(prec), |acc, (ea, eq, c)| acc + term(ea, eq, c));
    let den = v.den().terms().fold(Cplx::zero(prec), |acc, (e, c)| acc + term(0, e, c));
    if v.den().is_zero() || den.log2_abs() < -(prec as f64) / 2.0 {
        return Err(Error::VanishingDenominator(format!(
            "denominator vanishes at M = {}, N = {}",
            pt.m(),
            pt.big_n()
        )));
    }
    Ok(num / den)
}
