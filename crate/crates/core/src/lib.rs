//! Colored HOMFLY polynomials of twist knots and the Whitehead link, their
//! evaluation at roots of unity, and the volume-conjecture sequences.

pub mod asymptotics;
pub mod coefficients;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod numeric;
pub mod oracle;
pub mod scalar;

pub use error::{Error, Result};

use num_rational::BigRational;

/// Exact coefficients.
pub type Rational = BigRational;
/// Exact Laurent polynomials in `a` and `q`.
pub type Poly = laurent::BiLaurent<Rational>;
/// Exact rational functions with q-only denominators.
pub type RatFn = laurent::RationalFn<Rational>;
/// Multiprecision complex values.
pub type Complex = numeric::Cplx<numeric::MpReal>;
