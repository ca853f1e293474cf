//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Monomials are dense exponent vectors aligned with [`Ring::variables`];
//! polynomials keep their terms strictly descending under the ring's
//! monomial order with no zero coefficients, so the leading term is always
//! the first one.

mod monomial;
pub(crate) mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use polynomial::{Poly, Term};
pub use ring::{MonomialOrder, Ring};

/// Exact rational coefficient. Always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Builds a rational from machine integers.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}
