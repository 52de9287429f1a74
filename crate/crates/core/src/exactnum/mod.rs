//! Exact scalars, dense univariate polynomials and dense matrices over the
//! rationals.

mod matrix;
mod poly;
mod rational;

pub use matrix::ExactMatrix;
pub use poly::{Degree, Poly};
pub use rational::{format_rational, int, parse_rational, pow, rat, Rational};
