//! Lusztig-Spaltenstein induction of cuspidal classes.
//!
//! Along the maximal-Levi chain `X_{m-δ} ⊂ X_m` (δ = 2 for `2A`, 1 otherwise)
//! the induced label adds 2 to the largest part. The exceptional cases are
//! a static lookup table.

use serde::Serialize;

use crate::cuspidal::ClassLabel;
use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InductionStep {
    pub source: ClassLabel,
    pub target_rank: u32,
    pub result: ClassLabel,
}

impl InductionStep {
    pub fn compute(source: &ClassLabel, target_rank: u32) -> Result<Self> {
        let result = induce_same_family(source, target_rank)?;
        Ok(Self { source: source.clone(), target_rank, result })
    }

    /// Number of maximal-Levi steps between source and target.
    pub fn steps(&self) -> u32 {
        (self.target_rank - self.source.rank()) / rank_step(self.source.family())
    }
}

/// Rank increase of one maximal-Levi step.
pub fn rank_step(family: Family) -> u32 {
    if family == Family::TwistedA {
        2
    } else {
        1
    }
}

/// Induces `c` along the same-family chain up to `target_rank`.
///
/// In type A the only cuspidal class is the regular one, so the result is the
/// regular class of the target.
pub fn induce_same_family(c: &ClassLabel, target_rank: u32) -> Result<ClassLabel> {
    let source_rank = c.rank();
    if target_rank < source_rank {
        return Err(Error::TargetRankTooSmall { source_rank, target: target_rank });
    }
    let family = c.family();
    let target = GroupSpec::new(family, target_rank)?;
    if family == Family::A {
        return ClassLabel::new(target, Partition::single_row(target.carrier_size()));
    }
    let diff = target_rank - source_rank;
    let delta = rank_step(family);
    if !diff.is_multiple_of(delta) {
        return Err(Error::InvalidGroup(format!(
            "{family} induction moves in rank steps of {delta}; cannot reach rank {target_rank} from {source_rank}"
        )));
    }
    let partition = c.partition().with_first_part_increased(2 * (diff / delta));
    ClassLabel::new(target, partition)
}

/// One block of the exceptional induction table: rows of Levi labels sitting
/// above the induced classes of `target`. `None` marks a blank cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InductionBlock {
    pub target: &'static str,
    pub columns: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [Option<&'static str>])],
}

impl InductionBlock {
    /// Printed (levi, label, induced class) triples in row order.
    pub fn cells(&self) -> impl Iterator<Item = (&'static str, &'static str, &'static str)> + '_ {
        self.rows.iter().flat_map(move |&(levi, entries)| {
            entries
                .iter()
                .zip(self.columns)
                .filter_map(move |(entry, &class)| entry.map(|label| (levi, label, class)))
        })
    }
}

pub const EXCEPTIONAL_INDUCTION: &[InductionBlock] = &[
    InductionBlock {
        target: "F_4",
        columns: &["F_4", "F_4(a_1)", "F_4(a_2)"],
        rows: &[
            ("B_3", &[Some("7"), Some("51^2"), Some("3^21")]),
            ("C_3", &[Some("6"), Some("42"), None]),
        ],
    },
    InductionBlock {
        target: "E_6",
        columns: &["E_6", "E_6(a_1)", "E_6(a_3)"],
        rows: &[("D_5", &[Some("91"), Some("73"), Some("531^2")])],
    },
    InductionBlock {
        target: "2E_6",
        columns: &["E_6", "E_6(a_1)", "D_5", "E_6(a_3)", "D_5(a_1)"],
        rows: &[
            ("2A_5", &[Some("6"), Some("51"), Some("42"), None, Some("321")]),
            ("2D_4", &[Some("71"), Some("53"), None, Some("3^21^2"), None]),
        ],
    },
    InductionBlock {
        target: "E_7",
        columns: &["E_7", "E_7(a_1)", "E_7(a_2)", "E_7(a_3)", "E_6(a_1)", "E_7(a_4)", "E_7(a_5)"],
        rows: &[
            (
                "D_6",
                &[Some("11.1"), Some("93"), Some("75"), Some("731^2"), Some("5^21^2"), Some("53^21"), None],
            ),
            (
                "E_6",
                &[Some("E_6"), Some("E_6(a_1)"), None, Some("E_6(a_3)"), None, None, Some("D_4(a_1)")],
            ),
        ],
    },
    InductionBlock {
        target: "E_8",
        columns: &[
            "E_8",
            "E_8(a_1)",
            "E_8(a_2)",
            "E_8(a_3)",
            "E_8(a_4)",
            "E_8(b_4)",
            "E_8(a_5)",
            "E_8(b_5)",
            "E_6(a_1)+A_1",
        ],
        rows: &[
            (
                "D_7",
                &[
                    Some("13.1"),
                    Some("11.3"),
                    Some("95"),
                    Some("931^2"),
                    Some("751^2"),
                    Some("73^21"),
                    Some("5^231"),
                    None,
                    None,
                ],
            ),
            (
                "E_7",
                &[
                    Some("E_7"),
                    Some("E_7(a_1)"),
                    Some("E_7(a_2)"),
                    Some("E_7(a_3)"),
                    Some("E_6(a_1)"),
                    Some("E_7(a_4)"),
                    None,
                    Some("E_7(a_5)"),
                    Some("A_4+A_1"),
                ],
            ),
        ],
    },
];

fn normalize_tag(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace() && *c != '_').collect::<String>().to_ascii_uppercase()
}

fn normalize_label(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '²' => out.push_str("^2"),
            '³' => out.push_str("^3"),
            '{' | '}' => {}
            _ => out.push(c),
        }
    }
    out.replace('_', "").to_ascii_uppercase()
}

/// Classical Levi rows compare labels as partitions, so `51^2`, `5,1,1` and
/// `511` all hit the same cell.
fn labels_match(levi: &str, stored: &str, query: &str) -> bool {
    if levi.parse::<GroupSpec>().is_ok() {
        if let (Ok(a), Ok(b)) = (stored.parse::<Partition>(), normalize_label(query).parse::<Partition>()) {
            return a == b;
        }
    }
    normalize_label(stored) == normalize_label(query)
}

/// The exceptional class obtained by inducing the class `label` of the Levi
/// subgroup `levi`.
pub fn exceptional_induction(levi: &str, label: &str) -> Result<&'static str> {
    let key = normalize_tag(levi);
    EXCEPTIONAL_INDUCTION
        .iter()
        .flat_map(InductionBlock::cells)
        .find(|&(l, stored, _)| normalize_tag(l) == key && labels_match(l, stored, label))
        .map(|(_, _, class)| class)
        .ok_or_else(|| Error::UnknownInductionCell(levi.to_string(), label.to_string()))
}

/// All printed (levi, label) cells inducing to `class` in the block for `target`.
pub fn induction_sources(target: &str, class: &str) -> Vec<(&'static str, &'static str)> {
    let (target, class) = (normalize_tag(target), normalize_label(class));
    EXCEPTIONAL_INDUCTION
        .iter()
        .filter(|b| normalize_tag(b.target) == target)
        .flat_map(InductionBlock::cells)
        .filter(|&(_, _, c)| normalize_label(c) == class)
        .map(|(levi, label, _)| (levi, label))
        .collect()
}
