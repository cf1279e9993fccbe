//! Exact scalars: the polynomial ring S ⊗ ℚ and its fraction field.
//!
//! Polynomials are stored in the simple-root variables α_i. Over ℚ these
//! generate the same ring as the fundamental weights; `w<i>` in the input
//! grammar is expanded through the inverse Cartan matrix.

mod parse;
mod poly;
mod ratfunc;

pub use parse::parse_polynomial;
pub use poly::{Monomial, Polynomial};
pub use ratfunc::{LinearForm, RationalFunction};

pub type Rational = num_rational::Rational64;
