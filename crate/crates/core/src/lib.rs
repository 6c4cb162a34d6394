//! Exact computation of Schur function expansions of Thom polynomials.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure algorithms:
//!
//! - [`partitions`]: partitions, containment, hooks, candidate enumeration and
//!   Schur expansions together with the column operator `Φ_p`.
//! - [`algebra`]: sparse multivariate polynomials over the integers, power
//!   series quotients and fraction-free linear solving.
//! - [`schur`]: complete, Schur and multi-Schur functions of differences of
//!   alphabets, resultants, the factorization fast path and the `π` operator.
//! - [`catalog`]: singularities, their Chern/Euler data and restriction
//!   equations.
//! - [`solver`]: assembling and solving restriction-equation systems, and
//!   independent verification of candidate expansions.
//! - [`closed_forms`]: closed forms and recursions (Porteous, `A_1`, `A_2`,
//!   `A_3`, `I_{2,2}`, `III_{2,3}`, Pascal staircases).
//!
//! IO, the command line and the golden-table corpus live in the companion
//! `thom` crate.

#![no_std]

extern crate alloc;

pub mod algebra;
pub mod catalog;
pub mod closed_forms;
pub mod partitions;
pub mod schur;
pub mod solver;

pub use algebra::{LinearSystem, Monomial, Polynomial, VarId};
pub use catalog::{Family, RestrictionEquation, SingularityId};
pub use partitions::{Partition, SchurExpansion};
pub use schur::{Alphabet, AlphabetDiff, Letter};
pub use solver::{SolveOptions, SolveReport};

pub use num_bigint::BigInt;
