//! Exact integer algebra: variables, sparse polynomials, determinants,
//! power series and linear systems.

mod det;
mod linsolve;
mod poly;
mod ring;
mod series;
mod var;

pub use det::determinant;
pub use linsolve::{LinearSystem, SolveError};
pub use poly::{Monomial, Polynomial};
pub use ring::Ring;
pub use series::{taylor_coeffs, SeriesError};
pub use var::VarId;
