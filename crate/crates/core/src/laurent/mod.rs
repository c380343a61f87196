//! Exact Laurent polynomial arithmetic in `a` and `q`.

mod bi;
pub mod cyclotomic;
pub mod json;
mod quantum;
mod ratfn;
mod uni;

pub use bi::BiLaurent;
pub use quantum::{
    framed_falling, framed_integer, framed_numerator, gauss_binomial, qfactorial, qint_falling,
    quantum_integer, z_poly,
};
pub use ratfn::RationalFn;
pub use uni::QLaurent;

/// Exact division `num / den`.
pub fn exact_div<C: crate::scalar::Coefficient>(
    num: &BiLaurent<C>,
    den: &BiLaurent<C>,
) -> crate::error::Result<BiLaurent<C>> {
    num.div_exact(den)
}
