//! Exact arithmetic substrate: rationals, sparse polynomials over named
//! variables, lexicographic monomial orders and polynomial matrices.

mod matrix;
mod monomial;
mod order;
mod parse;
mod poly;
pub mod rational;
mod var;

pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::MultiPoly;
pub use rational::{format_rational, parse_rational, Rational};
pub use var::Var;
