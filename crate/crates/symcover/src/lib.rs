//! Exact covers of symmetric groups by maximal subgroups.
//!
//! The library builds the minimal cover of S_n (n divisible by 6) out of
//! the S_{n/2} wr S_2 class, the alternating group, and the small
//! intransitive classes; constructs the witness permutation classes that
//! force the matching lower bound; verifies every counting identity and
//! inequality behind those facts in exact big-integer arithmetic; and
//! independently certifies covering numbers of small groups by explicit
//! enumeration plus an exact minimum set-cover search.
//!
//! Modules:
//! - [`cycletype`]: canonical cycle types, class sizes, enumeration.
//! - [`families`]: symbolic maximal-subgroup classes and exact
//!   per-member intersection counts.
//! - [`witness`]: the cover plan, the witness classes, the closed-form
//!   covering numbers, and the type-level cover checks.
//! - [`verifier`]: machine-checked lemma reports over exact integers and
//!   rationals.
//! - [`smallgroups`]: brute-force permutation engine, maximal-subgroup
//!   enumeration at degree <= 8, and the exact set-cover solver.

pub mod combin;
pub mod cycletype;
pub mod error;
pub mod families;
pub mod smallgroups;
pub mod verifier;
pub mod witness;

pub use error::{Error, Result};
