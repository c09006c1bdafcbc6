//! Exact computations on regular nilpotent Hessenberg varieties in type A.
//!
//! The crate builds the defining ideals of Hessenberg varieties in the affine
//! coordinate charts of the flag variety, eliminates variables in the chart of
//! the longest permutation, exhibits chains of Schubert-type subvarieties,
//! evaluates volume polynomials and localisation sums, and certifies the
//! Newton-Okounkov polygon of the Peterson variety in dimension three.

pub mod charts;
pub mod degree;
pub mod error;
pub mod exactalg;
pub mod hessenberg;
pub mod nokounkov;
pub mod schubert;
pub mod w0chart;

pub use error::{HessexError, Result};
pub use exactalg::{Monomial, MonomialOrder, MultiPoly, PolyMatrix, Rational, Var};
pub use hessenberg::{HessenbergFunction, Permutation};
