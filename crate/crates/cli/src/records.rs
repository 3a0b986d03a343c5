//! Output records. Every verb produces a list of records; the text and
//! structured formats are two renderings of the same list.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

/// One output record. Structured output writes each record as one JSON line
/// tagged by `record`; field order is declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "kebab-case")]
pub enum Record {
    /// Free-standing heading line.
    Heading { text: String },
    /// A single answer, printed bare.
    Value { query: String, value: String },
    /// Class labels of one group, printed comma-separated.
    Labels { group: String, labels: Vec<String> },
    Class { group: String, label: String, a_value: u64, dual_a_value: u64, minimal: bool },
    Table1Header { ranks: Vec<u32> },
    Table1Row { row: String, cells: Vec<Option<u64>> },
    Dual { group: String, label: String, dual_label: Option<String>, dual_a_value: u64 },
    Symbol { group: String, label: String, top: Vec<u32>, bottom: Vec<u32>, special: bool, upper_a: i64, dual_a: u64 },
    Induced { source: String, target: String },
    InductionCell { group: String, levi: String, label: String, class: String },
    ExceptionalMin { group: String, class: String, a_min: u32, levi_a: Vec<u32> },
    CuspidalDatum { group: String, label: String, a_value: u32, condition: String },
    Series { levi: String, lambda: String, a_value: u32, condition: String },
    DecHeader { kind: String, group: String, n: u32, k: u32, flags: Vec<u8>, column_groups: Vec<usize> },
    DecRow { label: String, a_value: u32, entries: Vec<i64>, block_end: bool },
    DecSeries { series: Vec<String> },
    SmallMatrix { kind: String, n: u32, q: u64, ell: u64, a: u8, b: u8, labels: Vec<String>, rows: Vec<Vec<u8>> },
    EllClass { q: u64, ell: u64, active: Vec<String>, conditions: Vec<String> },
    GapBound { kind: String, n: u32, bound: String, at_q: Option<u64>, value: Option<String> },
}

/// Line-delimited JSON.
pub fn render_structured(records: &[Record]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("records serialize") + "\n").collect()
}

pub fn parse_structured(text: &str) -> serde_json::Result<Vec<Record>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}

fn dash_or<T: ToString>(x: &Option<T>) -> String {
    x.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

/// Aligned plain text.
pub fn render_text(records: &[Record]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < records.len() {
        match &records[i] {
            Record::Table1Header { .. } | Record::Table1Row { .. } => {
                let end = run_end(records, i, |r| matches!(r, Record::Table1Header { .. } | Record::Table1Row { .. }));
                render_table1(&records[i..end], &mut out);
                i = end;
                continue;
            }
            Record::DecHeader { .. } => {
                let end = run_end(records, i + 1, |r| matches!(r, Record::DecRow { .. } | Record::DecSeries { .. }));
                render_dec(&records[i..end], &mut out);
                i = end;
                continue;
            }
            Record::InductionCell { .. } | Record::ExceptionalMin { .. } | Record::CuspidalDatum { .. } => {
                let same = std::mem::discriminant(&records[i]);
                let end = run_end(records, i, |r| std::mem::discriminant(r) == same);
                render_columns(&records[i..end], &mut out);
                i = end;
                continue;
            }
            other => render_line(other, &mut out),
        }
        i += 1;
    }
    out
}

fn run_end(records: &[Record], from: usize, keep: impl Fn(&Record) -> bool) -> usize {
    let mut end = from;
    while end < records.len() && keep(&records[end]) {
        end += 1;
    }
    end
}

fn render_line(r: &Record, out: &mut String) {
    let line = match r {
        Record::Heading { text } => text.clone(),
        Record::Value { value, .. } => value.clone(),
        Record::Labels { labels, .. } => labels.join(", "),
        Record::Class { group, label, a_value, dual_a_value, minimal } => format!(
            "{group} ({label})  a = {a_value}  dual a = {dual_a_value}{}",
            if *minimal { "  minimal" } else { "" }
        ),
        Record::Dual { group, label, dual_label, dual_a_value } => {
            format!("{group} ({label}) -> dual {}  a = {dual_a_value}", dash_or(dual_label))
        }
        Record::Symbol { group, label, top, bottom, special, upper_a, dual_a } => format!(
            "{group} ({label})  ({} | {})  {}  A(S) = {upper_a}  a(S*) = {dual_a}",
            join(top, ","),
            join(bottom, ","),
            if *special { "special" } else { "not special" }
        ),
        Record::Induced { source, target } => format!("{source} -> {target}"),
        Record::Series { levi, lambda, a_value, condition } => format!("({levi}, {lambda}) | {condition} | a = {a_value}"),
        Record::SmallMatrix { kind, n, q, ell, a, b, labels, rows } => {
            let mut s = format!("{kind} n={n} q={q} ℓ={ell} a={a} b={b}");
            for (i, (label, row)) in labels.iter().zip(rows).enumerate() {
                let cells: Vec<String> =
                    row[..=i].iter().map(|&x| if x == 0 { ".".to_string() } else { x.to_string() }).collect();
                let _ = write!(s, "\n{label:<4} | {}", cells.join(" "));
            }
            s
        }
        Record::EllClass { q, ell, active, conditions } => {
            let set = format!("{{{}}}", active.join(","));
            if conditions.is_empty() {
                format!("q={q} ℓ={ell} {set}")
            } else {
                format!("q={q} ℓ={ell} {set} {}", conditions.join(", "))
            }
        }
        Record::GapBound { kind, n, bound, at_q, value } => match (at_q, value) {
            (Some(q), Some(v)) => format!("{kind} n={n}: {bound}  at q={q}: {v}"),
            _ => format!("{kind} n={n}: {bound}"),
        },
        _ => unreachable!("grouped records are rendered as tables"),
    };
    out.push_str(&line);
    out.push('\n');
}

fn render_table1(records: &[Record], out: &mut String) {
    let mut rows: Vec<(String, Vec<String>)> = Vec::new();
    for r in records {
        match r {
            Record::Table1Header { ranks } => rows.push(("m".into(), ranks.iter().map(u32::to_string).collect())),
            Record::Table1Row { row, cells } => {
                rows.push((row.clone(), cells.iter().map(|c| c.map_or_else(|| "−".to_string(), |v| v.to_string())).collect()))
            }
            _ => unreachable!(),
        }
    }
    let label_w = rows.iter().map(|(l, _)| l.chars().count()).max().unwrap_or(0);
    let cols = rows.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|j| rows.iter().filter_map(|(_, c)| c.get(j)).map(|s| s.chars().count()).max().unwrap_or(1)).collect();
    for (n, (label, cells)) in rows.iter().enumerate() {
        let mut line = pad_right(label, label_w) + " |";
        for (j, c) in cells.iter().enumerate() {
            line.push(' ');
            line.push_str(&pad_left(c, widths[j]));
        }
        out.push_str(&line);
        out.push('\n');
        if n == 0 && matches!(records[0], Record::Table1Header { .. }) {
            out.push_str(&"-".repeat(line.chars().count()));
            out.push('\n');
        }
    }
}

fn pad_left(s: &str, w: usize) -> String {
    format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())))
}

fn pad_right(s: &str, w: usize) -> String {
    format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())))
}

fn columns_of(r: &Record) -> Vec<String> {
    match r {
        Record::InductionCell { group, levi, label, class } => vec![group.clone(), levi.clone(), label.clone(), class.clone()],
        Record::ExceptionalMin { group, class, a_min, levi_a } => {
            vec![group.clone(), class.clone(), a_min.to_string(), join(levi_a, ",")]
        }
        Record::CuspidalDatum { group, label, a_value, condition } => {
            vec![group.clone(), label.clone(), a_value.to_string(), condition.clone()]
        }
        _ => unreachable!(),
    }
}

fn render_columns(records: &[Record], out: &mut String) {
    let rows: Vec<Vec<String>> = records.iter().map(columns_of).collect();
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols).map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0)).collect();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, c)| if j + 1 == cols { c.clone() } else { pad_right(c, widths[j]) })
            .collect();
        out.push_str(cells.join(" | ").trim_end());
        out.push('\n');
    }
}

fn render_dec(records: &[Record], out: &mut String) {
    let Record::DecHeader { kind, group, n, k, flags, column_groups } = &records[0] else {
        unreachable!()
    };
    let mut rows: Vec<(&str, u32, &[i64], bool)> = Vec::new();
    let mut series: Option<&[String]> = None;
    for r in &records[1..] {
        match r {
            Record::DecRow { label, a_value, entries, block_end } => rows.push((label, *a_value, entries, *block_end)),
            Record::DecSeries { series: s } => series = Some(s),
            _ => unreachable!(),
        }
    }
    let size = rows.len();
    let cell = |i: usize, j: usize| -> String {
        match rows[i].2[j] {
            0 => ".".to_string(),
            x => x.to_string(),
        }
    };
    let label_w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0).max("HC-series".len());
    let col_w: Vec<usize> = (0..size)
        .map(|j| {
            let s = series.and_then(|s| s.get(j)).map_or(1, |s| s.chars().count());
            (j..size).map(|i| cell(i, j).len()).fold(s, usize::max)
        })
        .collect();
    let group_starts: Vec<usize> = column_groups
        .iter()
        .scan(0, |acc, &w| {
            *acc += w;
            Some(*acc)
        })
        .filter(|&s| s < size)
        .collect();
    let line = |label: &str, a: &str, cells: &[String]| -> String {
        let mut s = format!("{} | {} |", pad_right(label, label_w), pad_left(a, 2));
        for (j, c) in cells.iter().enumerate() {
            if group_starts.contains(&j) {
                s.push_str(" |");
            }
            s.push(' ');
            s.push_str(&pad_left(c, col_w[j]));
        }
        s.trim_end().to_string()
    };
    let _ = writeln!(out, "{group} ({kind}) n={n} k={k} (a,b,c,d,e)=({})", join(flags, ","));
    let head = line("rho", "a", &[]);
    let full: usize = label_w + 6 + col_w.iter().map(|w| w + 1).sum::<usize>() + 2 * group_starts.len();
    let rule = "-".repeat(full.max(head.chars().count()));
    let _ = writeln!(out, "{head}\n{rule}");
    for (i, (label, a, _, block_end)) in rows.iter().enumerate() {
        let cells: Vec<String> = (0..=i).map(|j| cell(i, j)).collect();
        let _ = writeln!(out, "{}", line(label, &a.to_string(), &cells));
        if *block_end {
            let _ = writeln!(out, "{rule}");
        }
    }
    if let Some(s) = series {
        let _ = writeln!(out, "{}", line("HC-series", "", s));
    }
}
