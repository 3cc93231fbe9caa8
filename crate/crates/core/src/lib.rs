//! Construction and verification of tight signed magic arrays.
//!
//! A tight signed magic array `SMA(m, n)` with `n` even is an `m × n` grid
//! holding every value of `{±1, …, ±mn/2}` exactly once, with every row and
//! column summing to zero. This crate builds one for every feasible `(m, n)`
//! such that `x` and `−x` always sit in the same row, and checks the result
//! independently.
//!
//! ```
//! use sma_core::{checker, composer};
//!
//! let a = composer::generate(7, 4).unwrap();
//! assert!(checker::verify_sma(&a).passed());
//! assert!(checker::verify_same_row_pairs(&a).passed());
//! ```

pub mod checker;
pub mod cli;
pub mod composer;
pub mod error;
pub mod even;
pub mod fixtures;
pub mod format;
pub mod grid;
pub mod heffter;
pub mod lemma3;
pub mod lemma5;
pub mod oracle;

pub use error::{Error, Result};
pub use grid::{ShiftAmount, SignedArray, SupportSpec};
