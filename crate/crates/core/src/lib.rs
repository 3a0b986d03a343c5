//! Unipotent classes, minimal a-values and small decomposition matrices of
//! finite classical groups.
//!
//! Everything here is exact integer or rational arithmetic over static data
//! and bounded enumerations.

pub mod cuspidal;
pub mod cyclotomic;
pub mod dectable;
pub mod error;
pub mod group;
pub mod hc_bound;
pub mod induction;
pub mod partition;
pub mod symbol;

pub use cuspidal::{
    a_min_closed_form, a_min_exceptional, a_value, centralizer_dim, dual_a_value, dual_class, enumerate_cuspidal,
    is_cuspidal, minimal_cuspidal, ClassLabel, ExceptionalMinimum, ExceptionalType,
};
pub use cyclotomic::{ell_class_from, kappa, EllClass, EllTag};
pub use dectable::{
    dec_small, dec_table, degree_gap_bound, template, DecKind, DecMatrix, DecTemplate, Expr, GapBound, SmallKind,
    SmallMatrix,
};
pub use error::{Error, Result};
pub use group::{carrier_size, Family, GroupSpec, RankDecomposition, Scheme};
pub use hc_bound::{
    cuspidal_brauer_data, enumerate_levi_types, hc_series_bound, Condition, CuspidalDatum, Factor, HcSeries, LeviType,
};
pub use induction::{exceptional_induction, induce_same_family, InductionStep, EXCEPTIONAL_INDUCTION};
pub use partition::Partition;
pub use symbol::{a_dual_via_symbol, is_special, s_min_symbol, springer_symbol, upper_a_value, DSymbol};

/// Layout of the low-rank minimum grid: the families in row order and the rank range.
pub const TABLE1_FAMILIES: [Family; 6] =
    [Family::A, Family::TwistedA, Family::B, Family::C, Family::D, Family::TwistedD];

/// Minimal a-value shown in the low-rank table, `None` for blank cells.
///
/// Blank cells are the ranks below each family's range, together with
/// `2A_1` (isomorphic to `A_1`) and the twisted `D` ranks below 4, which the
/// table merges into the `D` row.
pub fn table1_cell(family: Family, rank: u32) -> Option<u64> {
    let min = match family {
        Family::TwistedA => 2,
        Family::TwistedD => 4,
        other => other.min_rank(),
    };
    if rank < min {
        return None;
    }
    GroupSpec::new(family, rank).ok().map(a_min_closed_form)
}
