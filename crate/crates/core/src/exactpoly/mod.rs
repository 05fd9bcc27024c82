//! Exact arithmetic core: Gaussian-rational scalars and sparse polynomials in
//! boundary lengths `L_1..L_n` and a formal `pi`.
//!
//! `pi` is never a float here. It is an exponent on the monomial, so the
//! grading of a volume polynomial can be checked exactly.

mod coeff;
mod monomial;
mod poly;
mod render;
mod volume;

pub use coeff::{int, parse_rational, rat, ExactCoeff, Rational};
pub use monomial::Monomial;
pub use poly::Poly;
pub use render::to_latex;
pub use volume::{half_dimension, is_stable, VolumePoly};
