//! The sequences `x_{M,N} + i y_{M,N} = 2π Log(H_{M,N+1} / H_{M,N})`, the
//! `M_k` grid and the figure-eight integral `f(x)`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{precondition, Error, Result};
use crate::invariants::KnotId;
use crate::numeric::{evaluate, Evaluation, MpReal};
use crate::scalar::Real;

/// Hyperbolic volume and Chern-Simons value a sequence is compared against.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeTarget {
    pub knot: KnotId,
    pub vol: f64,
    pub cs: f64,
}

pub fn volume_target(knot: KnotId) -> Option<VolumeTarget> {
    let (vol, cs) = match knot.canonical() {
        KnotId::FigureEight => (2.029883212819307, 0.0),
        KnotId::FiveTwo => (2.82812, -3.02413),
        KnotId::SixOne => (3.16396, -6.79074),
        KnotId::Whitehead => (3.66386, 2.46742),
        KnotId::Twist(_) => return None,
    };
    Some(VolumeTarget { knot, vol, cs })
}

impl VolumeTarget {
    /// Euclidean distance from `(x, y)`, with y shifted by a multiple of
    /// 2π² to the representative nearest `cs`.
    pub fn distance(&self, x: f64, y: f64) -> f64 {
        let period = 2.0 * PI * PI;
        let y = y - ((y - self.cs) / period).round() * period;
        (x - self.vol).hypot(y - self.cs)
    }
}

#[derive(Clone, Debug)]
pub struct AsymptoticsSample {
    pub m: Ratio<i64>,
    pub big_n: u32,
    pub x: MpReal,
    pub y: MpReal,
    /// The smaller working precision of the two evaluations.
    pub precision: u32,
}

impl AsymptoticsSample {
    pub fn x_f64(&self) -> f64 {
        self.x.to_f64()
    }

    pub fn y_f64(&self) -> f64 {
        self.y.to_f64()
    }
}

fn log_ratio(
    m: Ratio<i64>,
    big_n: u32,
    lo: &Evaluation<MpReal>,
    hi: &Evaluation<MpReal>,
) -> Result<AsymptoticsSample> {
    if lo.value.is_zero() || hi.value.is_zero() {
        return Err(Error::VanishingValue(format!("H vanishes at M = {m}, N = {big_n} or N + 1")));
    }
    let prec = lo.precision_used.min(hi.precision_used);
    let l = (hi.value.clone() / lo.value.clone()).ln();
    let two_pi = MpReal::pi(prec) * MpReal::from_i64_prec(prec, 2);
    Ok(AsymptoticsSample {
        m,
        big_n,
        x: l.re * two_pi.clone(),
        y: l.im * two_pi,
        precision: prec,
    })
}

/// `(x_{M,N}, y_{M,N})`, principal branch. `prec` is the starting precision
/// for the adaptive evaluations.
pub fn xy_pair(knot: KnotId, m: Ratio<i64>, big_n: u32, prec: Option<u32>) -> Result<AsymptoticsSample> {
    let lo = evaluate(knot, m, big_n, prec)?;
    let hi = evaluate(knot, m, big_n + 1, prec)?;
    log_ratio(m, big_n, &lo, &hi)
}

/// Samples for `N = from, from + step, ..., <= to`, in increasing N.
pub fn sequence(
    knot: KnotId,
    m: Ratio<i64>,
    from: u32,
    to: u32,
    step: u32,
    prec: Option<u32>,
) -> Result<Vec<AsymptoticsSample>> {
    if step == 0 {
        return precondition("N step must be at least 1");
    }
    if from > to {
        return Ok(Vec::new());
    }
    let ns: Vec<u32> = (from..=to).step_by(step as usize).collect();
    let mut needed: Vec<u32> = ns.iter().flat_map(|&n| [n, n + 1]).collect();
    needed.sort_unstable();
    needed.dedup();
    let values: BTreeMap<u32, Evaluation<MpReal>> = needed
        .par_iter()
        .map(|&n| evaluate(knot, m, n, prec).map(|e| (n, e)))
        .collect::<Result<_>>()?;
    ns.iter().map(|&n| log_ratio(m, n, &values[&n], &values[&(n + 1)])).collect()
}

/// The `M_k` with `(M_k - 1)/(M_k + N - 2) = k / divisions`.
pub fn m_grid(big_n: u32, k: u32, divisions: u32) -> Result<Ratio<i64>> {
    if k == 0 || k >= divisions {
        return precondition(format!("need 1 <= k < divisions (got k = {k}, divisions = {divisions})"));
    }
    let (n, k, d) = (big_n as i64, k as i64, divisions as i64);
    Ok(Ratio::new(d + k * (n - 2), d - k))
}

/// `π (M - 1)/(M + N - 2)`.
pub fn theta<R: Real>(m: Ratio<i64>, big_n: u32, prec: u32) -> Result<R> {
    let denom = m + Ratio::from_integer(big_n as i64 - 2);
    if *denom.numer() <= 0 {
        return precondition(format!("M + N - 2 must be positive (M = {m}, N = {big_n})"));
    }
    let r = (m - Ratio::from_integer(1)) / denom;
    Ok(R::pi(prec) * R::from_i64_prec(prec, *r.numer()) / R::from_i64_prec(prec, *r.denom()))
}

/// One point of the integral analogue.
#[derive(Clone, Debug)]
pub struct GridPoint {
    pub k: u32,
    pub divisions: u32,
    pub sample: AsymptoticsSample,
}

/// `x_{M_k,N}` for k = 1..divisions-1.
pub fn integral_analogue(
    knot: KnotId,
    big_n: u32,
    prec: Option<u32>,
    divisions: u32,
) -> Result<Vec<GridPoint>> {
    if divisions < 2 {
        return precondition("divisions must be at least 2");
    }
    (1..divisions)
        .into_par_iter()
        .map(|k| {
            let m = m_grid(big_n, k, divisions)?;
            let sample = xy_pair(knot, m, big_n, prec)?;
            Ok(GridPoint { k, divisions, sample })
        })
        .collect()
}

const UPPER: f64 = 5.0 / 6.0;

/// `f(x) = 4 ∫_{πx}^{5π/6} log(2 sin t) dt` for `0 <= x <= 5/6`.
///
/// With `t = πx + (5π/6 - πx) u²` the logarithmic singularity at `t = 0`
/// becomes `u log u`, which Gauss-Kronrod handles without special care.
pub fn f_integral(x: f64) -> Result<f64> {
    if !(0.0..=UPPER).contains(&x) {
        return Err(Error::Domain(format!("f(x) needs 0 <= x <= 5/6 (got {x})")));
    }
    let (a, b) = (PI * x, PI * UPPER);
    if b - a <= 0.0 {
        return Ok(0.0);
    }
    let g = |u: f64| {
        let t = a + (b - a) * u * u;
        let s = 2.0 * t.sin();
        if s <= 0.0 {
            0.0
        } else {
            s.ln() * 2.0 * (b - a) * u
        }
    };
    let v = adaptive_gk(&g, 0.0, 1.0, 1e-13, 0)?;
    Ok(4.0 * v)
}

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = h * XGK[j];
        let s = f(c - dx) + f(c + dx);
        kron += WGK[j] * s;
        if j % 2 == 1 {
            gauss += WG[j / 2] * s;
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adaptive_gk<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> Result<f64> {
    let (v, err) = gk15(f, a, b);
    if err <= tol {
        return Ok(v);
    }
    if depth >= 50 {
        return Err(Error::Quadrature(format!("no convergence on [{a}, {b}]")));
    }
    let m = 0.5 * (a + b);
    Ok(adaptive_gk(f, a, m, tol / 2.0, depth + 1)? + adaptive_gk(f, m, b, tol / 2.0, depth + 1)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_solves_defining_ratio() {
        for n in [2u32, 75, 175] {
            for k in 1..12 {
                let m = m_grid(n, k, 12).unwrap();
                let r = (m - 1) / (m + Ratio::from_integer(n as i64 - 2));
                assert_eq!(r, Ratio::new(k as i64, 12));
            }
        }
        assert_eq!(m_grid(75, 6, 12).unwrap(), Ratio::from_integer(75));
        assert!(m_grid(10, 12, 12).is_err());
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta::<f64>(Ratio::from_integer(1), 50, 53).unwrap(), 0.0);
        let m = m_grid(40, 3, 12).unwrap();
        let t: f64 = theta(m, 40, 53).unwrap();
        assert!((t - PI / 4.0).abs() < 1e-15);
    }

    #[test]
    fn integral_endpoints() {
        assert_eq!(f_integral(UPPER).unwrap(), 0.0);
        assert!((f_integral(0.0).unwrap() - 2.029883212819307).abs() < 1e-10);
        assert!(f_integral(0.9).is_err());
    }

    #[test]
    fn distance_uses_nearest_branch() {
        let t = volume_target(KnotId::FiveTwo).unwrap();
        let y = -3.02413 + 2.0 * PI * PI;
        assert!(t.distance(2.82812, y) < 1e-12);
    }

    #[test]
    fn fig8_sequence_is_real() {
        let s = xy_pair(KnotId::FigureEight, Ratio::from_integer(2), 20, None).unwrap();
        assert!(s.y_f64().abs() < 1e-30);
        assert!(s.x_f64() > 0.0);
    }
}
