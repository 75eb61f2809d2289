//! Exact dense linear algebra over big rationals.

mod det;
mod matrix;
mod minors;
mod pfaffian;
mod poly;

pub use det::{bareiss, det, det_integer};
pub use matrix::{ExactMatrix, SkewMatrix};
pub use minors::{
    binomial_u, pfaffian_congruence, sum_of_minors, Combinations, MinorSelector,
    DEFAULT_SUBSET_BUDGET,
};
pub use pfaffian::{pfaffian, pfaffian_elimination, pfaffian_matchings, MATCHING_LIMIT};
pub use poly::{divides, interpolate, ExactPolynomial};
