//! Exact enumeration of cyclic permutations in `k x 1` grid classes.
//!
//! A signature `σ` over `{+, -}` describes the permutations that split into
//! `k` contiguous monotone segments. This crate counts the `n`-cycles in such
//! classes through necklace formulas, checks every formula against an
//! exhaustive enumeration of cycles, and groups signatures by equal counts.

pub mod arith;
pub mod cli;
pub mod closedforms;
pub mod equivalence;
pub mod error;
pub mod oracle;
pub mod perms;
pub mod record;
pub mod verify;
pub mod words;

pub use arith::ExactInt;
pub use error::{Error, Result};
pub use perms::{Permutation, Segmentation, Sign, Signature};
pub use words::{Necklace, Word};
