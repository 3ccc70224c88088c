//! Involutive non-degenerate set-theoretic solutions of the Yang–Baxter
//! equation, finite left braces, and the brace structure carried by the
//! permutation group of a solution.

pub mod brace;
pub mod cli;
pub mod config;
pub mod error;
pub mod family;
pub mod gbrace;
pub mod perm;
pub mod report;
pub mod solution;

pub use config::{Coverage, VerifyConfig};
pub use error::{Error, Result};
