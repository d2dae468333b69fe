pub mod cli;
pub mod coinvariants;
pub mod error;
pub mod fuss;
pub mod harmonics;
pub mod linalg;
pub mod parking;
pub mod partition;
pub mod paths;
pub mod perm;
pub mod poly;
pub mod qtpoly;
pub mod selftest;
pub mod vandermonde;

pub use error::{Error, Result};
pub use poly::{BiDegree, Monomial, Poly, Rational, Var};
