//! Exact computation of the real dimension of semi-algebraic sets defined by
//! polynomial equations over the rationals.

pub mod cli;
pub mod critvals;
pub mod dimension;
pub mod error;
pub mod groebner;
pub mod oracle2d;
pub mod polyring;
pub mod univariate;

pub use error::{Error, Result};
pub use polyring::{MPoly, Monomial, MonomialOrder, Rational, Ring};
pub use univariate::UPoly;
