//! Exact polynomial and rational-function arithmetic over ℚ, integer and
//! polynomial matrices, characteristic polynomials with adjugates, and
//! polynomial-matrix determinants.

mod charpoly;
mod det;
mod interp;
mod json;
mod matrix;
pub(crate) mod poly;
mod ratfun;

pub use charpoly::{charpoly, charpoly_and_adjugate, charpoly_and_adjugate_with, charpoly_with};
pub use det::{bareiss_det, evaluation_point, polymatrix_det, polymatrix_det_with, rational_det};
pub use interp::lagrange_interpolate;
pub use json::{poly_from_json, poly_to_json, ratfun_from_json, ratfun_to_json};
pub use matrix::{IntMatrix, PolyMatrix};
pub use poly::Poly;
pub use ratfun::RatFun;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Integer as an exact rational.
pub fn rational(n: i64) -> BigRational {
    poly::rat(n)
}
