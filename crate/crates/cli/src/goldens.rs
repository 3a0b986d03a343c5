//! Canonical regeneration of every table as golden files.

use std::fs;
use std::io;
use std::path::Path;

use hcseries_core::hc_bound::hc_tables;
use hcseries_core::{
    dec_table, hc_series_bound, DecKind, EllClass, EllTag, ExceptionalType, Family, GroupSpec, EXCEPTIONAL_INDUCTION,
};

use crate::commands::{dec_records, exceptional_record, series_records, table1_records};
use crate::records::{render_text, Record};

fn ell_name(ell: &EllClass) -> String {
    match ell.active().iter().next() {
        Some(tag) => tag.to_string(),
        None => "none".to_string(),
    }
}

fn single_classes() -> Vec<EllClass> {
    std::iter::once(EllClass::none()).chain(EllTag::ALL.into_iter().map(EllClass::single)).collect()
}

fn series_file(groups: &[GroupSpec], a_max: u32, ell: &EllClass) -> Vec<Record> {
    let mut out = Vec::new();
    for &g in groups {
        out.push(Record::Heading { text: format!("{g}  ℓ-class {ell}  a ≤ {a_max}") });
        let rows = hc_series_bound(g, a_max, ell).expect("supported group and ℓ-class");
        out.extend(series_records(&rows));
    }
    out
}

fn cuspidal_data(keep: impl Fn(Family, u32) -> bool) -> Vec<Record> {
    hc_tables()
        .cuspidal
        .iter()
        .filter(|d| keep(d.factor.family, d.factor.rank))
        .map(|d| Record::CuspidalDatum {
            group: d.factor.to_string(),
            label: d.label.clone(),
            a_value: d.a_value,
            condition: d.condition.to_string(),
        })
        .collect()
}

fn groups(family: Family, ranks: std::ops::RangeInclusive<u32>) -> Vec<GroupSpec> {
    ranks.map(|r| GroupSpec::new(family, r).expect("valid rank")).collect()
}

fn dec_file_stem(kind: DecKind) -> &'static str {
    match kind {
        DecKind::DPlus => "spinplus",
        DecKind::DMinus => "spinminus",
        DecKind::B => "spinodd",
    }
}

/// File name and records of every golden table.
pub fn golden_tables() -> Vec<(String, Vec<Record>)> {
    let mut files = vec![("table1.txt".to_string(), table1_records(10))];

    let induction = EXCEPTIONAL_INDUCTION
        .iter()
        .flat_map(|b| {
            b.cells().map(move |(levi, label, class)| Record::InductionCell {
                group: b.target.to_string(),
                levi: levi.to_string(),
                label: label.to_string(),
                class: class.to_string(),
            })
        })
        .collect();
    files.push(("table2.txt".into(), induction));
    files.push(("table3.txt".into(), ExceptionalType::ALL.into_iter().map(exceptional_record).collect()));

    // the D_2 datum is derived from A_1 x A_1 and is not part of the printed table
    files.push((
        "cusp-dn.txt".into(),
        cuspidal_data(|f, r| matches!(f, Family::A | Family::TwistedD) || (f == Family::D && r != 2)),
    ));
    files.push(("cusp-bn.txt".into(), cuspidal_data(|f, _| f == Family::B)));

    for ell in single_classes() {
        let mut dn = groups(Family::D, 4..=6);
        dn.extend(groups(Family::TwistedD, 4..=6));
        files.push((format!("small-dn-{}.txt", ell_name(&ell)), series_file(&dn, 3, &ell)));
        if !ell.is_active(EllTag::E2) {
            files.push((format!("small-bn-{}.txt", ell_name(&ell)), series_file(&groups(Family::B, 2..=6), 4, &ell)));
        }
    }

    for kind in DecKind::ALL {
        let tags = std::iter::once(None).chain(kind.flag_tags().into_iter().flatten().map(Some));
        for tag in tags {
            let ell = tag.map_or_else(EllClass::none, EllClass::single);
            let m = dec_table(kind, kind.min_rank(), &ell).expect("single flag at the base rank");
            files.push((format!("{}-k0-{}.txt", dec_file_stem(kind), ell_name(&ell)), dec_records(&m)));
        }
    }
    files
}

/// Writes the golden files into `dir` and returns their names.
pub fn write_goldens(dir: &Path) -> io::Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let mut names = Vec::new();
    for (name, records) in golden_tables() {
        fs::write(dir.join(&name), render_text(&records))?;
        names.push(name);
    }
    Ok(names)
}
