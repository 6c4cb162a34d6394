//! Command line, serialization formats and golden tables on top of
//! `thom-core`.
//!
//! - [`format`]: text and JSON renderings of expansions
//! - [`golden`]: the built-in coefficient tables and their loader
//! - [`run`]: per-singularity solver settings and table verification
//! - [`cli`]: the `thom` command

pub mod cli;
pub mod clock;
pub mod format;
pub mod golden;
pub mod run;

pub use clock::InstantClock;
