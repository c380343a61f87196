//! Uncolored HOMFLY polynomial by switching and smoothing down to
//! descending diagrams.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use super::diagram::Diagram;
use crate::error::{Error, Result};
use crate::laurent::{z_poly, BiLaurent, QLaurent, RationalFn};

type R = RationalFn<BigRational>;

/// Largest diagram the recursion accepts.
pub const CROSSING_LIMIT: usize = 12;

fn z() -> R {
    R::from_poly(BiLaurent::from_q(z_poly()))
}

/// `[0;a] = (a - a^{-1}) / (q - q^{-1})`, the value of a split unknot.
pub fn loop_value() -> R {
    let one = BigRational::one();
    let num = BiLaurent::from_terms([(1, 0, one.clone()), (-1, 0, -one)]);
    R::from_parts(num, z_poly()).expect("q-only denominator")
}

fn a_power(w: i32) -> R {
    R::from_poly(BiLaurent::monomial(w, 0, BigRational::one()))
}

struct Skein {
    open_first: bool,
    memo: HashMap<String, R>,
    z: R,
    delta: R,
}

impl Skein {
    /// The regular-isotopy value: `<L+> - <L-> = z <L0>`, a positive kink
    /// is `a`, and the unknot is 1.
    fn bracket(&mut self, d: &Diagram) -> R {
        let key = format!("{:?}", d.canonical());
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = match d.first_ascending(self.open_first) {
            None => {
                let loops = d.component_count() as u32;
                &a_power(d.writhe()) * &self.delta.pow(loops.saturating_sub(1))
            }
            Some(k) => {
                let s = d.crossings[k].sign;
                let switched = self.bracket(&d.switched(k));
                let smoothed = &self.bracket(&d.smoothed(k)) * &self.z;
                if s > 0 {
                    &switched + &smoothed
                } else {
                    &switched - &smoothed
                }
            }
        };
        self.memo.insert(key, v.clone());
        v
    }
}

fn run(d: &Diagram, open_first: bool) -> Result<R> {
    d.validate()?;
    if d.crossings.len() > CROSSING_LIMIT {
        return Err(Error::CrossingBudget { crossings: d.crossings.len(), limit: CROSSING_LIMIT });
    }
    if d.component_count() == 0 {
        return Err(Error::InvalidDiagram("empty diagram".into()));
    }
    let mut s = Skein { open_first, memo: HashMap::new(), z: z(), delta: loop_value() };
    let b = s.bracket(d);
    Ok(&a_power(-d.writhe()) * &b)
}

/// HOMFLY polynomial with `a H(L+) - a^{-1} H(L-) = z H(L0)` and
/// `H(unknot) = 1`.
pub fn homfly_skein(d: &Diagram) -> Result<R> {
    run(d, false)
}

/// The same value computed with the open component walked first, starting
/// at the cut. Equal to [`homfly_skein`]; kept separate so the two
/// traversals can be compared.
pub fn homfly_tangle(d: &Diagram) -> Result<R> {
    if d.open_edge.is_none() {
        return Err(Error::InvalidDiagram("diagram has no open edge".into()));
    }
    run(d, true)
}

/// Checks `a H(D+) - a^{-1} H(D-) = z H(D0)` at crossing `k`, computing all
/// three values independently.
pub fn skein_triple_check(d: &Diagram, k: usize) -> Result<bool> {
    if k >= d.crossings.len() {
        return Err(Error::InvalidDiagram(format!("no crossing {k}")));
    }
    let (plus, minus) = if d.crossings[k].sign > 0 {
        (d.clone(), d.switched(k))
    } else {
        (d.switched(k), d.clone())
    };
    let hp = homfly_skein(&plus)?;
    let hm = homfly_skein(&minus)?;
    let h0 = homfly_skein(&d.smoothed(k))?;
    let lhs = &(&a_power(1) * &hp) - &(&a_power(-1) * &hm);
    Ok(lhs == &z() * &h0)
}

/// `H` with `a = 1`: the Conway polynomial in `z`, returned as a q-Laurent
/// polynomial via `z = q - q^{-1}`.
pub fn conway(h: &R) -> Option<QLaurent<BigRational>> {
    let n = h.num().substitute_a(0);
    n.div_exact(h.den())
}
