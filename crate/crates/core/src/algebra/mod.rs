//! Exact arithmetic: rationals, sparse polynomials, rational functions,
//! truncated series and fraction-free linear algebra.

pub mod json;
pub mod linalg;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod ring;
pub mod series;

pub use linalg::{solve_linear_exact, solve_linear_poly};
pub use poly::{one_minus, product, Monomial, MultiPoly, Var};
pub use ratfun::RationalFunction;
pub use rational::ExactRational;
pub use ring::{ExactDomain, Ring, RingOps};
pub use series::{series_invert, TruncatedSeries};
