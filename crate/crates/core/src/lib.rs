//! Rationality analysis for finite permutation groups.
//!
//! The crate decides whether a group is rational, inverse semi-rational
//! ("cut") or semi-rational, computes the degree of the field generated by
//! its character values from the Galois action on conjugacy classes, and
//! runs corpus-wide checks of known theorems and open questions about cut
//! groups.
//!
//! ```
//! use cutgroups::{constructions, rationality, DEFAULT_CAP};
//!
//! let q8 = constructions::dicyclic(2).unwrap();
//! let report = rationality::group_rationality(&q8, DEFAULT_CAP).unwrap();
//! assert!(report.is_rational && report.is_cut);
//! assert_eq!(report.qg_degree, 1);
//! ```

pub mod arith;
pub mod bundled;
pub mod chain;
pub mod cli;
pub mod constructions;
pub mod corpus;
mod error;
pub mod group;
pub mod perm;
pub mod rationality;
pub mod structure;
pub mod survey;

pub use error::{Error, Result};
pub use group::{PermGroup, DEFAULT_CAP};
pub use perm::Permutation;
