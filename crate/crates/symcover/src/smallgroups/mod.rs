//! Explicit permutation engine and exact minimum set-cover solver for
//! small groups. This module is the ground-truth oracle for the symbolic
//! counting conventions used everywhere else, and it certifies covering
//! numbers of S_n / A_n at small degree by exhaustive search.

pub mod bits;
pub mod catalog;
pub mod cover;
pub mod group;
pub mod maximal;
pub mod perm;

use std::collections::BTreeMap;

pub use catalog::{Catalog, CatalogEntry};
pub use cover::{
    build_cover_instance, exact_min_cover, greedy_cover, CoverOutcome, SetCoverInstance,
    SolveBudget,
};
pub use group::{closure, DenseGroup, DEFAULT_CLOSURE_CEILING};
pub use maximal::{cross_validate_two_generated, maximal_subgroups, Ambient, MaximalSubgroup};
pub use perm::{all_perms, Perm};

use crate::cycletype::CycleType;

/// Exact per-cycle-type counts inside one explicit subgroup member: the
/// brute-force oracle behind `families::count_in_member`.
pub fn bucket_by_type(elements: &[Perm]) -> BTreeMap<CycleType, u64> {
    let mut buckets = BTreeMap::new();
    for p in elements {
        *buckets.entry(p.cycle_type()).or_insert(0u64) += 1;
    }
    buckets
}
