//! Exact rational arithmetic and sparse polynomial vector-field calculus.
//!
//! Everything here is exact: coefficients are [`Rational`] values and no
//! operation ever rounds. Polynomials live over a fixed [`Vars`] tuple and
//! refuse to combine with polynomials over a different tuple.

mod error;
mod field;
pub mod linalg;
mod monomial;
pub mod par;
mod poly;
mod rational;

pub use error::PolyError;
pub use field::PolyVectorField;
pub use linalg::Matrix;
pub use monomial::Monomial;
pub use poly::{Polynomial, Vars};
pub use rational::{int, parse_rational, q, Rational};
