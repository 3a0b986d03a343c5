//! Workloads shared by the benchmarks.

use hcseries_core::{dual_a_value, enumerate_cuspidal, EllClass, EllTag, Family, GroupSpec};

/// Classical groups of every family from the smallest rank up to `max_rank`.
pub fn groups_up_to(max_rank: u32) -> Vec<GroupSpec> {
    Family::ALL
        .into_iter()
        .flat_map(|f| (f.min_rank()..=max_rank).filter_map(move |r| GroupSpec::new(f, r).ok()))
        .collect()
}

/// Minimum of the dual a-value over all cuspidal classes, by enumeration.
pub fn brute_force_a_min(g: GroupSpec) -> Option<u64> {
    enumerate_cuspidal(g).iter().filter_map(|c| dual_a_value(c).ok()).min()
}

/// The trivial class and each single condition.
pub fn single_ell_classes() -> Vec<EllClass> {
    std::iter::once(EllClass::none()).chain(EllTag::ALL.into_iter().map(EllClass::single)).collect()
}
