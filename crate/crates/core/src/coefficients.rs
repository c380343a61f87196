//! Closed-form skein coefficients α, β, γ, c and S.
//!
//! Every descending bracket product `[x][x-1]...` with fewer than one
//! factor is 1. Out-of-range recurrence terms are zero.

use crate::error::{precondition, Error, Result};
use crate::laurent::{
    framed_falling, framed_integer, gauss_binomial, qint_falling, z_poly, BiLaurent, QLaurent,
    RationalFn,
};
use crate::scalar::Coefficient;

/// `num / den` for polynomials in q; fails if `den` vanishes.
pub(crate) fn q_ratio<C: Coefficient>(num: QLaurent<C>, den: QLaurent<C>) -> Result<RationalFn<C>> {
    if den.is_zero() {
        return Err(Error::VanishingDenominator("a quantum integer in the denominator is zero".into()));
    }
    RationalFn::from_parts(BiLaurent::from_q(num), den)
}

/// `[top-1;a]...[stop;a] / ([top]...[stop+1])`, the closing ratio of the
/// knot sums. Equal to 1 when `stop >= top`.
pub(crate) fn closing_ratio<C: Coefficient>(top: i32, stop: i32) -> Result<RationalFn<C>> {
    let count = (top - stop).max(0);
    let den = qint_falling::<C>(top, count);
    Ok(&framed_falling::<C>(top - 1, count) * &q_ratio(QLaurent::one(), den)?)
}

/// α^i_{m,n}(a, q), the coefficient of the i-th term when a full twist of
/// two parallel bundles of m and n strands is resolved.
///
/// Requires `m, n >= i >= 0`. The formula is symmetric in `m` and `n`.
pub fn alpha<C: Coefficient>(m: i32, n: i32, i: i32) -> Result<BiLaurent<C>> {
    if i < 0 || m < i || n < i {
        return precondition(format!("alpha needs m, n >= i >= 0 (got m={m}, n={n}, i={i})"));
    }
    let mut out = z_poly::<C>().pow(i as u32);
    if i % 2 == 1 {
        out = -out;
    }
    out = out.shift(-i * (i - 1));
    for t in 0..i {
        out = &out * &gauss_binomial(m - t, 1, -2)?;
    }
    out = &out * &gauss_binomial(n, i, -2)?;
    Ok(BiLaurent::from_slice(-i, out))
}

/// α^i_{m,n}(a^{-1}, q^{-1}).
pub fn alpha_mirror<C: Coefficient>(m: i32, n: i32, i: i32) -> Result<BiLaurent<C>> {
    Ok(alpha::<C>(m, n, i)?.invert_vars())
}

/// α with its arguments optionally inverted; `mirrored` selects (a^{-1}, q^{-1}).
pub fn alpha_signed<C: Coefficient>(m: i32, n: i32, i: i32, mirrored: bool) -> Result<BiLaurent<C>> {
    if mirrored {
        alpha_mirror(m, n, i)
    } else {
        alpha(m, n, i)
    }
}

/// β^k_{i,j;m,n}(a, q).
///
/// Requires `1 <= i <= j <= min(m, n) - 1` and `0 <= k <= i`.
pub fn beta<C: Coefficient>(i: i32, j: i32, k: i32, m: i32, n: i32) -> Result<RationalFn<C>> {
    if !(1 <= i && i <= j && j < m.min(n) && 0 <= k && k <= i) {
        return precondition(format!(
            "beta needs 1 <= i <= j <= min(m,n)-1 and 0 <= k <= i (got i={i}, j={j}, k={k}, m={m}, n={n})"
        ));
    }
    let num = &(&qint_falling::<C>(m - j, k) * &qint_falling(n - j, k)) * &qint_falling(j, i - k);
    let num = &num * &gauss_binomial(i, k, 2)?;
    let den = &qint_falling::<C>(m, i) * &qint_falling(n, i);
    let r = q_ratio(num.shift(k * (k - i)), den)?;
    Ok(&r * &framed_falling(m + n - j - k - 1, i - k))
}

/// γ^l_{i,j,k}(a, q), the coefficient for closing three symmetrized
/// bundles in the annulus.
///
/// Requires `i, j, k >= 1` and `0 <= l <= min(j, k)`.
pub fn gamma<C: Coefficient>(i: i32, j: i32, k: i32, l: i32) -> Result<RationalFn<C>> {
    if i < 1 || j < 1 || k < 1 || l < 0 || l > j.min(k) {
        return precondition(format!(
            "gamma needs i, j, k >= 1 and 0 <= l <= min(j,k) (got i={i}, j={j}, k={k}, l={l})"
        ));
    }
    let num = &qint_falling::<C>(i, i) * &gauss_binomial(i - 1 + l, i - 1, 2)?;
    let den = &qint_falling::<C>(i + j, i) * &qint_falling(i + k, i);
    let r = q_ratio(num.shift(-(i - 1) * l), den)?;
    Ok(&(&r * &framed_falling(i + j + k - l - 1, i - 1)) * &framed_integer(j + k - 2 * l))
}

/// c_{l1,l2} for the expansion of `C_{i,j,k}` in terms of
/// `C_{i-l1, j-l2, k-l2}`.
///
/// Requires `0 <= l1 <= i` and `0 <= l2 <= min(j, k)`.
pub fn c_coeff<C: Coefficient>(l1: i32, l2: i32, i: i32, j: i32, k: i32) -> Result<RationalFn<C>> {
    if l1 < 0 || l1 > i || l2 < 0 || l2 > j.min(k) {
        return precondition(format!(
            "c_coeff needs 0 <= l1 <= i and 0 <= l2 <= min(j,k) (got l1={l1}, l2={l2}, i={i}, j={j}, k={k})"
        ));
    }
    let num = &(&qint_falling::<C>(j, l2) * &qint_falling(k, l2)) * &qint_falling(i, l1);
    let num = &num * &gauss_binomial(l1 + l2, l1, 2)?;
    let den = &qint_falling::<C>(i + j, l1 + l2) * &qint_falling(i + k, l1 + l2);
    let r = q_ratio(num.shift(-l1 * l2), den)?;
    Ok(&r * &framed_falling(i + j + k - l2 - 1, l1))
}

/// Which of the two displayed sums defines S_{m,n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SBranch {
    /// `m >= n`: sum to n with α_{n,m}.
    MAtLeastN,
    /// `n >= m`: sum to m with α_{m,n}.
    NAtLeastM,
}

/// S_{m,n}(a, q): the scalar left when n strands twisted around m
/// symmetrized strands are closed off.
pub fn s_coeff<C: Coefficient>(m: i32, n: i32) -> Result<RationalFn<C>> {
    let branch = if m >= n { SBranch::MAtLeastN } else { SBranch::NAtLeastM };
    s_coeff_branch(m, n, branch)
}

/// S_{m,n} through a chosen branch. The branch must be admissible.
pub fn s_coeff_branch<C: Coefficient>(m: i32, n: i32, branch: SBranch) -> Result<RationalFn<C>> {
    if m < 0 || n < 0 {
        return precondition(format!("s_coeff needs m, n >= 0 (got m={m}, n={n})"));
    }
    let (top, a1, a2) = match branch {
        SBranch::MAtLeastN if m >= n => (n, n, m),
        SBranch::NAtLeastM if n >= m => (m, m, n),
        _ => return precondition(format!("branch {branch:?} does not apply to m={m}, n={n}")),
    };
    let terms = (0..=top)
        .map(|i| Ok(closing_ratio::<C>(n, i)?.mul_poly(&alpha_mirror(a1, a2, i)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RationalFn::sum(terms))
}

/// Right-hand side of the two-term recurrence for β at level `i >= 2`.
pub fn beta_recurrence_rhs<C: Coefficient>(
    i: i32,
    j: i32,
    k: i32,
    m: i32,
    n: i32,
) -> Result<RationalFn<C>> {
    let h = i - 1;
    let (mm, nn) = (m - h, n - h);
    let den = &crate::laurent::quantum_integer::<C>(mm) * &crate::laurent::quantum_integer(nn);
    let mut out = RationalFn::zero();
    if k <= h {
        let coef = &framed_integer::<C>(mm + nn - (k - h + j) - 1)
            * &q_ratio(crate::laurent::quantum_integer(j - h + k), den.clone())?;
        out = &out + &(&coef * &beta(h, j, k, m, n)?);
    }
    if k >= 1 {
        let e = j - h + k - 1;
        let num = &crate::laurent::quantum_integer::<C>(mm - e) * &crate::laurent::quantum_integer(nn - e);
        out = &out + &(&q_ratio(num, den)? * &beta(h, j, k - 1, m, n)?);
    }
    Ok(out)
}

/// Right-hand side of the two-term recurrence for c_{l1,l2}.
pub fn c_recurrence_rhs<C: Coefficient>(
    l1: i32,
    l2: i32,
    i: i32,
    j: i32,
    k: i32,
) -> Result<RationalFn<C>> {
    use crate::laurent::quantum_integer as qi;
    let den = &qi::<C>(i + j - l1 - l2 + 1) * &qi(i + k - l1 - l2 + 1);
    let mut out = RationalFn::zero();
    if l2 >= 1 {
        let num = &qi::<C>(j - l2 + 1) * &qi(k - l2 + 1);
        out = &out + &(&q_ratio(num, den.clone())? * &c_coeff(l1, l2 - 1, i, j, k)?);
    }
    if l1 >= 1 {
        let coef = &framed_integer::<C>(i + j + k - l1 - 2 * l2) * &q_ratio(qi(i - l1 + 1), den)?;
        out = &out + &(&coef * &c_coeff(l1 - 1, l2, i, j, k)?);
    }
    Ok(out)
}

/// γ^l_{i,j,k} rebuilt from the last step of the c recursion:
/// `c_{i-1,l} · [j+k-2l;a][1] / ([j-l+1][k-l+1])`.
pub fn gamma_from_c<C: Coefficient>(i: i32, j: i32, k: i32, l: i32) -> Result<RationalFn<C>> {
    use crate::laurent::quantum_integer as qi;
    let close = &framed_integer::<C>(j + k - 2 * l) * &q_ratio(qi(1), &qi::<C>(j - l + 1) * &qi(k - l + 1))?;
    Ok(&c_coeff(i - 1, l, i, j, k)? * &close)
}
