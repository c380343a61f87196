//! Cyclotomic factorization of q-only denominators.
//!
//! Every denominator built from quantum integers and powers of
//! `q - q^{-1}` is a monomial times a product of cyclotomic polynomials
//! `Φ_d(q)`. Factoring lets sums use the least common denominator.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::uni::QLaurent;
use crate::scalar::Coefficient;

fn cache() -> &'static Mutex<HashMap<u32, Vec<i64>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cyclotomic_int(d: u32) -> Vec<i64> {
    if let Some(v) = cache().lock().unwrap().get(&d) {
        return v.clone();
    }
    // x^d - 1 divided by Φ_e for every proper divisor e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d % e == 0 {
            num = int_div(&num, &cyclotomic_int(e));
        }
    }
    cache().lock().unwrap().insert(d, num.clone());
    num
}

// Exact division of integer polynomials by a monic divisor.
fn int_div(n: &[i64], d: &[i64]) -> Vec<i64> {
    let m = d.len();
    let mut rem = n.to_vec();
    let qlen = n.len() + 1 - m;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + m - 1];
        q[k] = c;
        if c != 0 {
            for j in 0..m {
                rem[k + j] -= c * d[j];
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// The cyclotomic polynomial `Φ_d(q)`.
pub fn cyclotomic<C: Coefficient>(d: u32) -> QLaurent<C> {
    assert!(d >= 1, "cyclotomic index must be positive");
    QLaurent::from_coeffs(0, cyclotomic_int(d).into_iter().map(C::from_int).collect())
}

/// `unit * q^shift * Π Φ_d^{e_d}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CycloFactors<C> {
    pub unit: C,
    pub shift: i32,
    pub factors: BTreeMap<u32, u32>,
}

impl<C: Coefficient> CycloFactors<C> {
    pub fn expand(&self) -> QLaurent<C> {
        let mut out = QLaurent::monomial(self.shift, self.unit.clone());
        for (&d, &e) in &self.factors {
            out = &out * &cyclotomic::<C>(d).pow(e);
        }
        out
    }
}

/// Factors `p` completely into cyclotomic polynomials, or returns `None`.
pub fn factor<C: Coefficient>(p: &QLaurent<C>) -> Option<CycloFactors<C>> {
    let shift = p.low_degree()?;
    let mut rem = p.shift(-shift);
    let deg0 = rem.high_degree().unwrap() as u32;
    let mut factors = BTreeMap::new();
    let mut d = 1;
    while rem.high_degree().unwrap() > 0 && d <= 4 * deg0 + 4 {
        if totient(d) as i32 <= rem.high_degree().unwrap() {
            let phi = cyclotomic::<C>(d);
            while let Some(q) = rem.div_exact(&phi) {
                *factors.entry(d).or_insert(0) += 1;
                rem = q;
            }
        }
        d += 1;
    }
    if rem.high_degree() != Some(0) {
        return None;
    }
    Some(CycloFactors { unit: rem.coeff(0), shift, factors })
}

/// Returns `(l, m1, m2)` with `l = d1 * m1 = d2 * m2`.
///
/// `l` is the least common multiple when both inputs factor into
/// cyclotomics, and the plain product otherwise.
pub fn common_multiple<C: Coefficient>(
    d1: &QLaurent<C>,
    d2: &QLaurent<C>,
) -> (QLaurent<C>, QLaurent<C>, QLaurent<C>) {
    if d1 == d2 {
        return (d1.clone(), QLaurent::one(), QLaurent::one());
    }
    if let Some(m) = d2.div_exact(d1) {
        return (d2.clone(), m, QLaurent::one());
    }
    if let Some(m) = d1.div_exact(d2) {
        return (d1.clone(), QLaurent::one(), m);
    }
    if let (Some(f1), Some(f2)) = (factor(d1), factor(d2)) {
        let mut m1 = QLaurent::one();
        for (&d, &e2) in &f2.factors {
            let e1 = f1.factors.get(&d).copied().unwrap_or(0);
            if e2 > e1 {
                m1 = &m1 * &cyclotomic::<C>(d).pow(e2 - e1);
            }
        }
        let l = d1 * &m1;
        if let Some(m2) = l.div_exact(d2) {
            return (l, m1, m2);
        }
    }
    (d1 * d2, d2.clone(), d1.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    type P = QLaurent<Ratio<i64>>;

    #[test]
    fn small_cyclotomics() {
        let c = |d| cyclotomic_int(d);
        assert_eq!(c(1), vec![-1, 1]);
        assert_eq!(c(2), vec![1, 1]);
        assert_eq!(c(6), vec![1, -1, 1]);
        assert_eq!(c(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn factor_quantum_integer() {
        // q^{-2} + 1 + q^2 = q^{-2} Φ_3 Φ_6
        let p = P::from_coeffs(-2, vec![1.into(), 0.into(), 1.into(), 0.into(), 1.into()]);
        let f = factor(&p).unwrap();
        assert_eq!(f.shift, -2);
        assert_eq!(f.factors.get(&3), Some(&1));
        assert_eq!(f.factors.get(&6), Some(&1));
        assert_eq!(f.expand(), p);
    }

    #[test]
    fn lcm_is_smaller_than_product() {
        let a = &cyclotomic::<Ratio<i64>>(2) * &cyclotomic(3);
        let b = &cyclotomic::<Ratio<i64>>(3) * &cyclotomic(5);
        let (l, m1, m2) = common_multiple(&a, &b);
        assert_eq!(&a * &m1, l);
        assert_eq!(&b * &m2, l);
        assert_eq!(l.high_degree(), Some(1 + 2 + 4));
    }
}
