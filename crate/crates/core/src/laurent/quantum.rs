//! Quantum integers, framed quantum integers and Gaussian binomials.

use super::bi::BiLaurent;
use super::ratfn::RationalFn;
use super::uni::QLaurent;
use crate::error::{precondition, Result};
use crate::scalar::Coefficient;

/// `z = q - q^{-1}`.
pub fn z_poly<C: Coefficient>() -> QLaurent<C> {
    QLaurent::from_terms([(1, C::one()), (-1, -C::one())])
}

/// The quantum integer `[n] = (q^n - q^{-n}) / (q - q^{-1})`, as a polynomial in q.
///
/// `[0] = 0` and `[-n] = -[n]`.
pub fn quantum_integer<C: Coefficient>(n: i32) -> QLaurent<C> {
    let sign = if n < 0 { -C::one() } else { C::one() };
    let k = n.abs();
    QLaurent::from_terms((0..k).map(|t| (k - 1 - 2 * t, sign.clone())))
}

/// Numerator `a q^n - a^{-1} q^{-n}` of the framed integer `[n;a]`.
pub fn framed_numerator<C: Coefficient>(n: i32) -> BiLaurent<C> {
    BiLaurent::from_terms([(1, n, C::one()), (-1, -n, -C::one())])
}

/// The framed quantum integer `[n;a] = (a q^n - a^{-1} q^{-n}) / (q - q^{-1})`.
pub fn framed_integer<C: Coefficient>(n: i32) -> RationalFn<C> {
    RationalFn::from_parts(framed_numerator(n), z_poly()).expect("z is nonzero")
}

/// The Gaussian binomial `[n choose k]` in base `x = q^b`:
/// `Π_{t<k} (1 - x^{n-t}) / (1 - x^{t+1})`.
///
/// Zero when `k > n`; requires `n, k >= 0`.
pub fn gauss_binomial<C: Coefficient>(n: i32, k: i32, b: i32) -> Result<QLaurent<C>> {
    if n < 0 || k < 0 {
        return precondition(format!("gauss_binomial needs n, k >= 0 (got {n}, {k})"));
    }
    if k > n {
        return Ok(QLaurent::zero());
    }
    let k = k.min(n - k) as usize;
    // row[j] = [m choose j]_x, built with [m choose j] = [m-1 choose j-1] + x^j [m-1 choose j]
    let mut row = vec![QLaurent::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity((m + 1).min(k + 1));
        for j in 0..=m.min(k) {
            let left = if j >= 1 { row[j - 1].clone() } else { QLaurent::zero() };
            let right = row.get(j).map_or_else(QLaurent::zero, |r| r.shift(b * j as i32));
            next.push(&left + &right);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// `[top][top-1]...[top-count+1]`; the empty product is 1.
pub fn qint_falling<C: Coefficient>(top: i32, count: i32) -> QLaurent<C> {
    (0..count).fold(QLaurent::one(), |acc, t| &acc * &quantum_integer(top - t))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn qfactorial<C: Coefficient>(n: i32) -> QLaurent<C> {
    qint_falling(n, n)
}

/// `[top;a][top-1;a]...[top-count+1;a]`; the empty product is 1.
pub fn framed_falling<C: Coefficient>(top: i32, count: i32) -> RationalFn<C> {
    let num = (0..count).fold(BiLaurent::one(), |acc, t| &acc * &framed_numerator(top - t));
    RationalFn::from_parts(num, z_poly().pow(count.max(0) as u32)).expect("z is nonzero")
}
