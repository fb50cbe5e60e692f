//! Sparse multivariate polynomials over Q and the textual input format.

mod document;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use document::{BracketEntry, Document};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_polynomial;
pub use polynomial::Polynomial;
pub use ring::{is_identifier, VariableRing};

pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `n/d`; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
