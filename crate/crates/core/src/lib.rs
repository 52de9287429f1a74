//! Exact-arithmetic toolkit for characterizing the degree of an equidistant
//! interpolation polynomial through determinants of combinatorial matrices.
//!
//! Every closed form in this crate ships next to an independent evaluation
//! path (cofactor expansion, subset enumeration, symbolic differentiation,
//! Lagrange construction) so the identities can be checked against each
//! other bit for bit. Nothing here touches floating point.

pub mod combinat;
pub mod degreematrix;
mod error;
pub mod exactnum;
pub mod interp;
pub mod vandermonde;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{Degree, ExactMatrix, Poly, Rational};
