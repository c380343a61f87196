//! Summand-wise evaluation of the invariant sums at an [`EvalPoint`].

use rayon::prelude::*;

use super::complex::Cplx;
use super::point::{EvalPoint, Tables};
use crate::error::{precondition, Error, Result};
use crate::invariants::{twist_params, KnotId};
use crate::scalar::Real;

/// The value of an invariant at a point, with bookkeeping.
#[derive(Clone, Debug)]
pub struct Evaluation<R> {
    pub value: Cplx<R>,
    pub precision_used: u32,
    pub terms_evaluated: u64,
    pub terms_skipped_zero: u64,
    /// log2 of the largest partial sum magnitude seen.
    pub largest_log2: f64,
}

/// `[k] = sin(kθ) / sin θ`.
pub fn eval_qint<R: Real>(k: i64, pt: &EvalPoint) -> R {
    let prec = pt.precision();
    if pt.qint_is_zero(k) {
        return R::zero_prec(prec);
    }
    let th: R = pt.theta();
    (th.clone() * R::from_i64_prec(prec, k)).sin() / th.sin()
}

/// `[k;a]` at the point, with the exact-zero flag.
#[derive(Clone, Debug)]
pub struct FramedValue<R> {
    pub value: R,
    pub exact_zero: bool,
}

/// `[k;a] = sin((M+k)θ) / sin θ`.
pub fn eval_framed<R: Real>(k: i64, pt: &EvalPoint) -> FramedValue<R> {
    let prec = pt.precision();
    if pt.framed_is_zero(k) {
        return FramedValue { value: R::zero_prec(prec), exact_zero: true };
    }
    let th: R = pt.theta();
    let mk = R::from_i64_prec(prec, pt.m_num() + k * pt.m_den()) / R::from_i64_prec(prec, pt.m_den());
    FramedValue { value: (th.clone() * mk).sin() / th.sin(), exact_zero: false }
}

/// `Σ_{i=0}^{N-1} Π_{t=1}^{i} (2 sin((M+t-2)θ))²`.
pub fn fig8_sine<R: Real>(pt: &EvalPoint) -> R {
    let prec = pt.precision();
    let tables = super::point::PhaseTable::<R>::new(pt);
    let two = R::from_i64_prec(prec, 2);
    let mut prod = R::one_prec(prec);
    let mut sum = R::one_prec(prec);
    for t in 1..pt.big_n() as i64 {
        let s = two.clone() * tables.sin(pt.monomial_index(1, t - 2));
        prod = prod * s.clone() * s;
        sum = sum + prod.clone();
    }
    sum
}

/// A real magnitude times `e^{i π idx / (2D)}`.
struct Phased<R> {
    mag: R,
    idx: i64,
}

struct Ctx<R> {
    t: Tables<R>,
    n: i64,
    d: i64,
}

impl<R: Real> Ctx<R> {
    fn new(pt: &EvalPoint) -> Result<Self> {
        let n = pt.color();
        let t = Tables::new(pt, (2 * n + 2) as usize)?;
        Ok(Ctx { t, n, d: pt.d() })
    }

    fn prec(&self) -> u32 {
        self.t.pt.precision()
    }

    fn to_cplx(&self, p: &Phased<R>) -> Cplx<R> {
        self.t.phases.cis(p.idx).scale(&p.mag)
    }

    /// α^i_{m,n}, or its mirror image.
    fn alpha(&self, m: i64, n: i64, i: i64, mirrored: bool) -> Phased<R> {
        let x = i * (i - 1) + i * (m - 1) - i * (i - 1) / 2 + i * (n - i);
        let mag = self.t.falling(m, i) * self.t.binom(n, i) * self.t.z_pow[i as usize].clone();
        let pt = &self.t.pt;
        let idx = if mirrored {
            pt.monomial_index(i, x) + self.d * i
        } else {
            pt.monomial_index(-i, -x) + 3 * self.d * i
        };
        Phased { mag, idx }
    }

    /// Phase index of a^{-2s} q^{-2s(s-1)-4su}, s = n - u.
    fn framing_index(&self, u: i64) -> i64 {
        let s = self.n - u;
        self.t.pt.monomial_index(-2 * s, -2 * s * (s - 1) - 4 * s * u)
    }

    fn prefactor_index(&self, w: i64) -> i64 {
        let n = self.n;
        self.t.pt.monomial_index(n * w, n * (n - 1) * w)
    }

    /// `[top-1;a]...[stop;a] / ([top]...[stop+1])`, or `None` for an exact zero.
    fn closing(&self, top: i64, stop: i64) -> Option<R> {
        if stop >= top {
            return Some(R::one_prec(self.prec()));
        }
        let num = self.t.framed_range(stop, top - 1)?;
        Some(num * self.t.fact[stop as usize].clone() / self.t.fact[top as usize].clone())
    }

    /// Closing ratios `R(d) = [n-1;a]...[n-d;a] / ([n]...[n+1-d])` for d = 0..=n.
    fn closing_table(&self) -> Vec<Option<R>> {
        (0..=self.n).map(|d| self.closing(self.n, self.n - d)).collect()
    }
}

/// Pairwise sum with a shape fixed by the length alone.
pub(crate) fn tree_sum<R: Real>(mut v: Vec<Cplx<R>>, prec: u32) -> Cplx<R> {
    if v.is_empty() {
        return Cplx::zero(prec);
    }
    while v.len() > 1 {
        let mut next = Vec::with_capacity(v.len().div_ceil(2));
        let mut it = v.into_iter();
        while let Some(x) = it.next() {
            next.push(match it.next() {
                Some(y) => x + y,
                None => x,
            });
        }
        v = next;
    }
    v.pop().unwrap()
}

struct Partial<R> {
    value: Cplx<R>,
    evaluated: u64,
    skipped: u64,
}

fn finish<R: Real>(ctx: &Ctx<R>, parts: Vec<Partial<R>>, pre_idx: i64) -> Result<Evaluation<R>> {
    let prec = ctx.prec();
    let evaluated = parts.iter().map(|p| p.evaluated).sum();
    let skipped = parts.iter().map(|p| p.skipped).sum();
    let largest_log2 = parts
        .iter()
        .map(|p| p.value.log2_abs())
        .fold(f64::NEG_INFINITY, f64::max);
    let sum = tree_sum(parts.into_iter().map(|p| p.value).collect(), prec);
    let value = sum * ctx.t.phases.cis(pre_idx);
    if !value.is_finite() {
        return Err(Error::PrecisionExhausted { bits: prec, largest_log2 });
    }
    Ok(Evaluation {
        value,
        precision_used: prec,
        terms_evaluated: evaluated,
        terms_skipped_zero: skipped,
        largest_log2,
    })
}

/// The 5_2 / 6_1 triple sum, term by term. Kept as a cross-check for the
/// factored twist recursion, which needs O(n^2) terms instead of O(n^3).
fn two_bridge<R: Real>(ctx: &Ctx<R>, outer_mirrored: bool, w: i64) -> Result<Evaluation<R>> {
    let n = ctx.n;
    let closing = ctx.closing_table();
    let parts: Vec<Partial<R>> = (0..=n)
        .into_par_iter()
        .map(|i| {
            let ai = ctx.alpha(n, n, i, outer_mirrored);
            let mut terms = Vec::new();
            let mut skipped = 0u64;
            for j in 0..=i {
                let aj = ctx.alpha(i, i, j, false);
                let ea = -2 * (2 * n - 2 * i + j);
                let eq = -2 * (2 * n * n - 2 * n - 2 * i * i + 2 * i + 2 * i * j - j * j - j);
                let e_idx = ctx.t.pt.monomial_index(ea, eq);
                for k in 0..=(i - j) {
                    let Some(r) = &closing[(i - j - k) as usize] else {
                        skipped += 1;
                        continue;
                    };
                    let ak = ctx.alpha(i - j, i - j, k, false);
                    let p = Phased {
                        mag: ai.mag.clone() * aj.mag.clone() * ak.mag * r.clone(),
                        idx: ai.idx + aj.idx + ak.idx + e_idx,
                    };
                    terms.push(ctx.to_cplx(&p));
                }
            }
            let evaluated = terms.len() as u64;
            Partial { value: tree_sum(terms, ctx.prec()), evaluated, skipped }
        })
        .collect();
    finish(ctx, parts, ctx.prefactor_index(w))
}

/// K_p through the level recursion
/// `T_0(u) = R(u)`, `T_l(u) = Σ_j α^j_{u,u} [e(u-j) unless l = 1] T_{l-1}(u-j)`.
fn twist<R: Real>(ctx: &Ctx<R>, p: i64) -> Result<Evaluation<R>> {
    let n = ctx.n;
    let (levels, w, mirrored) = twist_params(p as i32);
    let closing = ctx.closing_table();
    let mut level: Vec<Option<Cplx<R>>> =
        closing.into_iter().map(|r| r.map(Cplx::from_real)).collect();
    let mut evaluated = 0u64;
    let mut skipped = 0u64;
    for l in 1..=levels as i64 {
        let rows: Vec<(Option<Cplx<R>>, u64, u64)> = (0..=n)
            .into_par_iter()
            .map(|u| {
                let mut terms = Vec::new();
                let mut sk = 0u64;
                for j in 0..=u {
                    let Some(prev) = &level[(u - j) as usize] else {
                        sk += 1;
                        continue;
                    };
                    let mut a = ctx.alpha(u, u, j, false);
                    if l > 1 {
                        a.idx += ctx.framing_index(u - j);
                    }
                    terms.push(ctx.to_cplx(&a) * prev.clone());
                }
                let ev = terms.len() as u64;
                let v = (!terms.is_empty()).then(|| tree_sum(terms, ctx.prec()));
                (v, ev, sk)
            })
            .collect();
        level = Vec::with_capacity(rows.len());
        for (v, ev, sk) in rows {
            level.push(v);
            evaluated += ev;
            skipped += sk;
        }
    }
    let mut outer = Vec::new();
    for i in 0..=n {
        match &level[i as usize] {
            None => skipped += 1,
            Some(t) => {
                let mut a = ctx.alpha(n, n, i, mirrored);
                a.idx += ctx.framing_index(i);
                outer.push(ctx.to_cplx(&a) * t.clone());
            }
        }
    }
    evaluated += outer.len() as u64;
    let part = Partial { value: tree_sum(outer, ctx.prec()), evaluated, skipped };
    finish(ctx, vec![part], ctx.prefactor_index(w as i64))
}

/// The Whitehead sum: interior α γ S S̃ terms and the two boundary terms.
fn whitehead<R: Real>(ctx: &Ctx<R>) -> Result<Evaluation<R>> {
    let n = ctx.n;
    let prec = ctx.prec();
    // S_{n,m} S_{n,m}(a^{-1}, q^{-1}) for m = 0..=n; the closing ratio is
    // invariant under the inversion, so only α changes.
    let ss: Vec<(Option<Cplx<R>>, u64, u64)> = (0..=n)
        .into_par_iter()
        .map(|m| {
            let (mut s, mut s_inv) = (Vec::new(), Vec::new());
            let mut sk = 0u64;
            for i in 0..=m {
                let Some(b) = ctx.closing(m, i) else {
                    sk += 1;
                    continue;
                };
                let mut am = ctx.alpha(m, n, i, true);
                am.mag = am.mag * b.clone();
                let mut ap = ctx.alpha(m, n, i, false);
                ap.mag = ap.mag * b;
                s.push(ctx.to_cplx(&am));
                s_inv.push(ctx.to_cplx(&ap));
            }
            let ev = s.len() as u64;
            let v = (!s.is_empty()).then(|| tree_sum(s, prec) * tree_sum(s_inv, prec));
            (v, ev, sk)
        })
        .collect();
    let mut parts: Vec<Partial<R>> = (1..n)
        .into_par_iter()
        .map(|i| {
            let ai = ctx.alpha(n, n, i, false);
            let (ii, jj) = (n - i, i);
            let mut terms = Vec::new();
            let mut skipped = 0u64;
            for j in 0..=i {
                let Some(ssv) = &ss[(i - j) as usize].0 else {
                    skipped += 1;
                    continue;
                };
                // γ^j_{n-i,i,i} is real at these points
                let fr = ctx.t.framed_range(jj + jj - j + 1, ii + jj + jj - j - 1);
                let last = (jj + jj - 2 * j) as usize;
                let (Some(fr), false) = (fr, ctx.t.framed_zero[last]) else {
                    skipped += 1;
                    continue;
                };
                let f = &ctx.t.fact;
                let g = f[ii as usize].clone() * f[jj as usize].clone() * f[jj as usize].clone()
                    / (f[(ii + jj) as usize].clone() * f[(ii + jj) as usize].clone())
                    * ctx.t.binom(ii - 1 + j, ii - 1)
                    * fr
                    * ctx.t.framed[last].clone();
                let p = Phased { mag: ai.mag.clone() * g, idx: ai.idx };
                terms.push(ctx.to_cplx(&p) * ssv.clone());
            }
            let evaluated = terms.len() as u64;
            Partial { value: tree_sum(terms, prec), evaluated, skipped }
        })
        .collect();
    let mut boundary = Vec::new();
    let mut skipped = 0u64;
    match &ss[n as usize].0 {
        Some(v) => boundary.push(ctx.to_cplx(&ctx.alpha(n, n, n, false)) * v.clone()),
        None => skipped += 1,
    }
    match ctx.closing(n, 0) {
        Some(r) => boundary.push(Cplx::from_real(r)),
        None => skipped += 1,
    }
    let evaluated = boundary.len() as u64 + ss.iter().map(|x| x.1).sum::<u64>();
    skipped += ss.iter().map(|x| x.2).sum::<u64>();
    parts.push(Partial { value: tree_sum(boundary, prec), evaluated, skipped });
    finish(ctx, parts, ctx.prefactor_index(2))
}

/// Evaluates the invariant of `knot` at color `N - 1` and the given point.
pub fn eval_invariant<R: Real>(knot: KnotId, pt: &EvalPoint) -> Result<Evaluation<R>> {
    if knot == KnotId::FigureEight {
        let v = fig8_sine::<R>(pt);
        return Ok(Evaluation {
            largest_log2: v.log2_abs(),
            value: Cplx::from_real(v),
            precision_used: pt.precision(),
            terms_evaluated: pt.big_n() as u64,
            terms_skipped_zero: 0,
        });
    }
    let ctx = Ctx::<R>::new(pt)?;
    match knot.canonical() {
        KnotId::FiveTwo => twist(&ctx, 3),
        KnotId::SixOne => twist(&ctx, 4),
        KnotId::Whitehead => whitehead(&ctx),
        KnotId::Twist(p) if p >= 3 => twist(&ctx, p as i64),
        other => precondition(format!("no numeric formula for {other}")),
    }
}

/// The 5_2 or 6_1 value from the literal triple sum.
pub fn eval_triple_sum<R: Real>(knot: KnotId, pt: &EvalPoint) -> Result<Evaluation<R>> {
    let ctx = Ctx::<R>::new(pt)?;
    match knot.canonical() {
        KnotId::FiveTwo => two_bridge(&ctx, false, 6),
        KnotId::SixOne => two_bridge(&ctx, true, 2),
        other => precondition(format!("{other} has no triple-sum formula")),
    }
}
