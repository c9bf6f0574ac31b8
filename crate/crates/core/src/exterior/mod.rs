//! Bigraded exterior algebra over exact Gaussian rationals.

mod basis;
mod form;
mod monomial;
mod scalar;

pub use basis::{coordinates, Basis};
pub use form::Form;
pub use monomial::{Gen, Monomial, MAX_GENERATORS};
pub use scalar::{parse_rational, rat, rat_int, rational_sqrt, rational_to_f64, Rational, Scalar};
