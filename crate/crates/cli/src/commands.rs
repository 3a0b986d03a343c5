//! Command-line surface: argument types and the mapping from verbs to
//! library calls.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hcseries_core::{
    a_dual_via_symbol, a_min_closed_form, a_min_exceptional, a_value, dec_small, dec_table, degree_gap_bound,
    dual_a_value, dual_class, ell_class_from, enumerate_cuspidal, exceptional_induction, hc_series_bound,
    induce_same_family, is_special, minimal_cuspidal, springer_symbol, table1_cell, upper_a_value, ClassLabel,
    DecKind, DecMatrix, EllClass, ExceptionalType, Family, GroupSpec, HcSeries, Partition, SmallKind,
};
use num_bigint::BigInt;

use crate::records::Record;

#[derive(Debug, Parser)]
#[command(name = "hcseries", version, about = "Cuspidal unipotent classes, Harish-Chandra series bounds and decomposition templates")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    /// One JSON record per line.
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the cuspidal unipotent classes of a classical group.
    Cuspidal {
        group: GroupSpec,
        /// Also report the a-value and dual a-value of each class.
        #[arg(long)]
        a_values: bool,
    },
    /// Minimal dual a-value over the cuspidal classes (classical or exceptional).
    Amin { group: String },
    /// Minimal dual a-values of all classical families up to a rank.
    Table1 {
        #[arg(long, default_value_t = 10)]
        max_rank: u32,
    },
    /// Spaltenstein dual of a class and its a-value.
    Dual { group: GroupSpec, partition: Partition },
    /// Springer symbol of a cuspidal class of D or 2D (the minimal one by default).
    Symbol { group: GroupSpec, partition: Option<Partition> },
    /// Induce a cuspidal class to a larger rank, or look up an exceptional induction.
    Induce {
        /// Group of the class, or the Levi type with `--exceptional`.
        group: String,
        label: String,
        /// Target rank within the same family.
        #[arg(long, conflicts_with = "exceptional", required_unless_present = "exceptional")]
        to: Option<u32>,
        /// Read `group` as a Levi subgroup of an exceptional group.
        #[arg(long)]
        exceptional: bool,
    },
    /// Harish-Chandra series that may contain Brauer characters of small a-value.
    HcBound {
        group: GroupSpec,
        /// Largest a-value of interest; 4 for type B and 3 otherwise by default.
        #[arg(long)]
        a_max: Option<u32>,
        #[command(flatten)]
        ell: EllArgs,
    },
    /// Approximate decomposition matrix of Spin (d+, d- or b).
    Dectable {
        kind: DecKind,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        ell: EllArgs,
    },
    /// Decomposition of the first few unipotent characters for explicit q and ℓ.
    DecSmall {
        kind: SmallKindArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[arg(long = "l")]
        ell: u64,
    },
    /// Cyclotomic conditions satisfied by ℓ for the given q.
    Ellclass {
        #[arg(long)]
        q: u64,
        #[arg(long = "l")]
        ell: u64,
    },
    /// Degree threshold polynomial for the decomposition templates.
    GapBound {
        kind: DecKind,
        #[arg(long)]
        n: u32,
        /// Evaluate the polynomial at this q.
        #[arg(long)]
        q: Option<u64>,
    },
    /// Regenerate the golden table files.
    Goldens {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SmallKindArg {
    #[value(name = "d+")]
    DPlus,
    #[value(name = "d-")]
    DMinus,
    B,
}

impl From<SmallKindArg> for SmallKind {
    fn from(k: SmallKindArg) -> Self {
        match k {
            SmallKindArg::DPlus => SmallKind::Dpm { plus: true },
            SmallKindArg::DMinus => SmallKind::Dpm { plus: false },
            SmallKindArg::B => SmallKind::B,
        }
    }
}

/// The ℓ-class, either given directly or computed from `q` and `ℓ`.
#[derive(Debug, Clone, Args)]
pub struct EllArgs {
    /// Active condition tags, e.g. `e4`, `{}` or `none`.
    #[arg(long, conflicts_with_all = ["q", "l"])]
    pub ell: Option<EllClass>,
    #[arg(long, requires = "l")]
    pub q: Option<u64>,
    #[arg(long, requires = "q")]
    pub l: Option<u64>,
}

impl EllArgs {
    pub fn resolve(&self) -> hcseries_core::Result<EllClass> {
        match (&self.ell, self.q, self.l) {
            (Some(c), _, _) => Ok(c.clone()),
            (None, Some(q), Some(l)) => ell_class_from(q, l),
            _ => Ok(EllClass::none()),
        }
    }
}

pub fn family_row_name(family: Family) -> &'static str {
    match family {
        Family::A => "A_m",
        Family::TwistedA => "2A_m",
        Family::B => "B_m",
        Family::C => "C_m",
        Family::D | Family::TwistedD => "D_m,2D_m",
    }
}

pub fn table1_records(max_rank: u32) -> Vec<Record> {
    let mut out = vec![Record::Table1Header { ranks: (1..=max_rank).collect() }];
    for family in [Family::A, Family::TwistedA, Family::B, Family::C, Family::D] {
        out.push(Record::Table1Row {
            row: family_row_name(family).to_string(),
            cells: (1..=max_rank).map(|m| table1_cell(family, m)).collect(),
        });
    }
    out
}

pub fn cuspidal_records(group: GroupSpec, a_values: bool) -> hcseries_core::Result<Vec<Record>> {
    let classes = enumerate_cuspidal(group);
    if !a_values {
        return Ok(vec![Record::Labels {
            group: group.to_string(),
            labels: classes.iter().map(|c| c.partition().to_compact()).collect(),
        }]);
    }
    let minimal = minimal_cuspidal(group)?;
    classes
        .iter()
        .map(|c| {
            Ok(Record::Class {
                group: group.to_string(),
                label: c.partition().to_compact(),
                a_value: a_value(group.family(), group.rank(), c.partition())?,
                dual_a_value: dual_a_value(c)?,
                minimal: c == &minimal,
            })
        })
        .collect()
}

pub fn amin_records(group: &str) -> hcseries_core::Result<Vec<Record>> {
    if let Ok(g) = group.parse::<GroupSpec>() {
        return Ok(vec![Record::Value { query: g.to_string(), value: a_min_closed_form(g).to_string() }]);
    }
    let t: ExceptionalType = group.parse()?;
    Ok(vec![exceptional_record(t)])
}

pub fn exceptional_record(t: ExceptionalType) -> Record {
    let m = a_min_exceptional(t);
    Record::ExceptionalMin {
        group: t.name().to_string(),
        class: m.class.to_string(),
        a_min: m.a_min,
        levi_a: m.possible_levi_a.to_vec(),
    }
}

pub fn series_records(rows: &[HcSeries]) -> Vec<Record> {
    rows.iter()
        .map(|s| Record::Series {
            levi: s.levi.to_string(),
            lambda: s.lambda(),
            a_value: s.a_value(),
            condition: s.condition_text(),
        })
        .collect()
}

pub fn dec_records(m: &DecMatrix) -> Vec<Record> {
    let mut out = vec![Record::DecHeader {
        kind: m.kind.to_string(),
        group: m.kind.group_name().to_string(),
        n: m.n,
        k: m.k,
        flags: m.flags.to_vec(),
        column_groups: m.column_groups.clone(),
    }];
    for (i, row) in m.rows.iter().enumerate() {
        out.push(Record::DecRow {
            label: row.label.to_string(),
            a_value: row.a_value,
            entries: row.entries.clone(),
            block_end: m.row_blocks.contains(&(i + 1)),
        });
    }
    out.push(Record::DecSeries { series: m.series.clone() });
    out
}

fn induce_records(group: &str, label: &str, to: Option<u32>, exceptional: bool) -> hcseries_core::Result<Vec<Record>> {
    if exceptional {
        let class = exceptional_induction(group, label)?;
        return Ok(vec![Record::Induced { source: format!("{group} ({label})"), target: class.to_string() }]);
    }
    let c = ClassLabel::parse(group, label)?;
    let target = to.expect("clap requires --to without --exceptional");
    let induced = induce_same_family(&c, target)?;
    Ok(vec![Record::Induced { source: c.to_string(), target: induced.to_string() }])
}

fn default_a_max(group: GroupSpec) -> u32 {
    if group.family() == Family::B {
        4
    } else {
        3
    }
}

/// Runs every verb except `goldens`.
pub fn records_for(command: &Command) -> hcseries_core::Result<Vec<Record>> {
    match command {
        Command::Cuspidal { group, a_values } => cuspidal_records(*group, *a_values),
        Command::Amin { group } => amin_records(group),
        Command::Table1 { max_rank } => Ok(table1_records(*max_rank)),
        Command::Dual { group, partition } => {
            let c = ClassLabel::new(*group, partition.clone())?;
            let dual_label = dual_class(&c).ok().map(|d| d.partition().to_compact());
            Ok(vec![Record::Dual {
                group: group.to_string(),
                label: partition.to_compact(),
                dual_label,
                dual_a_value: dual_a_value(&c)?,
            }])
        }
        Command::Symbol { group, partition } => {
            let c = match partition {
                Some(p) => ClassLabel::new(*group, p.clone())?,
                None => minimal_cuspidal(*group)?,
            };
            let sym = springer_symbol(&c)?;
            Ok(vec![Record::Symbol {
                group: group.to_string(),
                label: c.partition().to_compact(),
                top: sym.top().to_vec(),
                bottom: sym.bottom().to_vec(),
                special: is_special(&sym),
                upper_a: upper_a_value(&sym),
                dual_a: a_dual_via_symbol(&c)?,
            }])
        }
        Command::Induce { group, label, to, exceptional } => induce_records(group, label, *to, *exceptional),
        Command::HcBound { group, a_max, ell } => {
            let ell = ell.resolve()?;
            let rows = hc_series_bound(*group, a_max.unwrap_or_else(|| default_a_max(*group)), &ell)?;
            Ok(series_records(&rows))
        }
        Command::Dectable { kind, n, ell } => Ok(dec_records(&dec_table(*kind, *n, &ell.resolve()?)?)),
        Command::DecSmall { kind, n, q, ell } => {
            let m = dec_small((*kind).into(), *n, *q, *ell)?;
            let kind = match kind {
                SmallKindArg::DPlus => "d+",
                SmallKindArg::DMinus => "d-",
                SmallKindArg::B => "b",
            };
            Ok(vec![Record::SmallMatrix {
                kind: kind.to_string(),
                n: m.n,
                q: m.q,
                ell: m.ell,
                a: m.a,
                b: m.b,
                labels: m.labels.iter().map(|s| s.to_string()).collect(),
                rows: m.entries.clone(),
            }])
        }
        Command::Ellclass { q, ell } => {
            let c = ell_class_from(*q, *ell)?;
            Ok(vec![Record::EllClass {
                q: *q,
                ell: *ell,
                active: c.active().iter().map(|t| t.to_string()).collect(),
                conditions: c.active().iter().map(|t| t.condition()).collect(),
            }])
        }
        Command::GapBound { kind, n, q } => {
            let bound = degree_gap_bound(*kind, *n)?;
            let value = q.map(|q| bound.eval(&BigInt::from(q)).to_string());
            Ok(vec![Record::GapBound { kind: kind.to_string(), n: *n, bound: bound.to_string(), at_q: *q, value }])
        }
        Command::Goldens { .. } => unreachable!("handled by the caller"),
    }
}
