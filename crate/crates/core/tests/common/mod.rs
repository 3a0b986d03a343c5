//! Shared helpers for the integration tests: the label rewriting moves that
//! walk a cuspidal label down to the minimal cuspidal class.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use hcseries_core::{DecKind, Family, Partition};

pub fn p(s: &str) -> Partition {
    s.parse().expect("partition literal")
}

/// One-step moves on a `2A` label with distinct parts.
pub fn moves_twisted_a(lambda: &Partition) -> Vec<Partition> {
    let mut padded = lambda.parts().to_vec();
    padded.push(0);
    let gap = |v: &[u32], i: usize| v[i] - v[i + 1];
    let k = lambda.len();
    let mut out = Vec::new();
    for i in 0..k {
        if gap(&padded, i) >= 2 {
            for j in i + 1..k {
                if gap(&padded, j) >= 2 {
                    let mut v = padded.clone();
                    v[i] -= 1;
                    v[j + 1] += 1;
                    out.push(Partition::from_unsorted(v));
                }
            }
        }
        if gap(&padded, i) >= 3 {
            let mut v = padded.clone();
            v[i] -= 1;
            v[i + 1] += 1;
            out.push(Partition::from_unsorted(v));
        }
    }
    out
}

/// Multiplicities `r_1, r_2, ...` of the conjugate partition, index 0 unused.
fn conjugate_multiplicities(lambda: &Partition) -> Vec<i64> {
    let parts = lambda.parts();
    let mut r = vec![0i64; parts.len() + 3];
    for (i, &x) in parts.iter().enumerate() {
        let next = parts.get(i + 1).copied().unwrap_or(0);
        r[i + 1] = i64::from(x - next);
    }
    r
}

fn from_conjugate_multiplicities(r: &[i64]) -> Partition {
    let mut parts = Vec::new();
    let mut running = 0i64;
    for i in (1..r.len()).rev() {
        running += r[i];
        if running > 0 {
            parts.push(running as u32);
        }
    }
    Partition::from_unsorted(parts)
}

/// One-step moves on a `C` label, acting on the multiplicities of `λ*`.
/// A change at index 0 is dropped.
pub fn moves_c(lambda: &Partition) -> Vec<Partition> {
    let r = conjugate_multiplicities(lambda);
    let h = r.len() - 3;
    let mut out = Vec::new();
    for i in 1..=h {
        if r[i] >= 4 {
            let mut s = r.clone();
            s[i - 1] += 2;
            s[i] -= 4;
            s[i + 1] += 2;
            s[0] = 0;
            out.push(from_conjugate_multiplicities(&s));
        }
    }
    let pairs: Vec<usize> = (1..=h).filter(|&i| r[i] == 2 && r[i + 1] == 2).collect();
    for (x, &i) in pairs.iter().enumerate() {
        for &j in &pairs[x + 1..] {
            let mut s = r.clone();
            s[i - 1] += 2;
            s[i] -= 2;
            s[j + 1] -= 2;
            s[j + 2] += 2;
            s[0] = 0;
            out.push(from_conjugate_multiplicities(&s));
        }
    }
    out
}

pub fn moves(family: Family, lambda: &Partition) -> Vec<Partition> {
    match family {
        Family::TwistedA => moves_twisted_a(lambda),
        Family::C => moves_c(lambda),
        other => panic!("no rewriting moves for {other}"),
    }
}

/// Outcome of exploring every move sequence from one start label.
pub struct Walk {
    pub visited: HashSet<Partition>,
    pub terminals: HashSet<Partition>,
    /// Moves whose result is not strictly smaller or not admissible.
    pub bad_steps: Vec<(Partition, Partition)>,
}

pub fn walk(family: Family, start: &Partition, admissible: impl Fn(&Partition) -> bool) -> Walk {
    let mut visited = HashSet::from([start.clone()]);
    let mut terminals = HashSet::new();
    let mut bad_steps = Vec::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(cur) = queue.pop_front() {
        let next = moves(family, &cur);
        if next.is_empty() {
            terminals.insert(cur.clone());
        }
        for n in next {
            let smaller = n != cur && cur.dominates(&n).unwrap_or(false);
            if !smaller || !admissible(&n) {
                bad_steps.push((cur.clone(), n));
                continue;
            }
            if visited.insert(n.clone()) {
                queue.push_back(n);
            }
        }
    }
    Walk { visited, terminals, bad_steps }
}

/// One data row of a LaTeX decomposition table body.
pub struct TexRow {
    pub label: String,
    pub a_value: u32,
    /// Normalized entry expressions; `None` for a dot.
    pub entries: Vec<Option<String>>,
}

pub struct TexTable {
    pub rows: Vec<TexRow>,
    pub series: Option<Vec<String>>,
}

pub fn tex_fixture(kind: DecKind) -> &'static str {
    match kind {
        DecKind::DPlus => include_str!("../fixtures/spin_plus.tex"),
        DecKind::DMinus => include_str!("../fixtures/spin_minus.tex"),
        DecKind::B => include_str!("../fixtures/spin_odd.tex"),
    }
}

/// Rewrites every `\binom{x}{y}` as `open x sep y close`.
fn rewrite_binom(s: &str, open: &str, sep: &str, close: &str) -> String {
    let mut out = String::new();
    let mut rest = s;
    while let Some(pos) = rest.find("\\binom{") {
        out.push_str(&rest[..pos]);
        let after = &rest[pos + "\\binom{".len()..];
        let top_end = after.find('}').expect("closing brace");
        let top = &after[..top_end];
        let bottom_start = &after[top_end + 1..];
        assert!(bottom_start.starts_with('{'), "malformed binomial in {s:?}");
        let bottom_end = bottom_start.find('}').expect("closing brace");
        let bottom = &bottom_start[1..bottom_end];
        out.push_str(&format!("{open}{top}{sep}{bottom}{close}"));
        rest = &bottom_start[bottom_end + 1..];
    }
    out.push_str(rest);
    out
}

pub fn normalize_tex_entry(cell: &str) -> Option<String> {
    let s = cell.replace("{\\!+\\!}", "+").replace("\\mn", "-");
    let s = rewrite_binom(&s, "binom(", ",", ")");
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    (s != ".").then_some(s)
}

pub fn normalize_tex_label(cell: &str) -> String {
    let s = rewrite_binom(cell, "(", "|", ")");
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub fn parse_tex_table(body: &str) -> TexTable {
    let mut rows = Vec::new();
    let mut series = None;
    for line in body.split("\\cr") {
        let line = line.replace("\\hline", "");
        let line = line.trim();
        if line.is_empty() || line.contains("a_\\rho") {
            continue;
        }
        let cells: Vec<&str> = line.split('&').map(str::trim).collect();
        if cells[0].contains("HC-series") {
            series = Some(cells[2..].iter().map(|c| c.to_string()).collect());
            continue;
        }
        rows.push(TexRow {
            label: normalize_tex_label(cells[0]),
            a_value: cells[1].parse().expect("a-value column"),
            entries: cells[2..].iter().map(|c| normalize_tex_entry(c)).collect(),
        });
    }
    TexTable { rows, series }
}

/// Evaluates a normalized table entry such as `a+kb+binom(k,2)` or
/// `k(c+e+k-1)`; `vals` maps `a..e` and `k` to numbers.
pub fn eval_entry(expr: &str, vals: &dyn Fn(char) -> i64) -> i64 {
    let chars: Vec<char> = expr.chars().collect();
    let mut pos = 0;
    let v = eval_sum(&chars, &mut pos, vals);
    assert_eq!(pos, chars.len(), "trailing input in {expr:?}");
    v
}

fn eval_sum(c: &[char], pos: &mut usize, vals: &dyn Fn(char) -> i64) -> i64 {
    let mut acc = eval_product(c, pos, vals);
    while *pos < c.len() && (c[*pos] == '+' || c[*pos] == '-') {
        let sign = if c[*pos] == '+' { 1 } else { -1 };
        *pos += 1;
        acc += sign * eval_product(c, pos, vals);
    }
    acc
}

fn eval_product(c: &[char], pos: &mut usize, vals: &dyn Fn(char) -> i64) -> i64 {
    let mut acc = 1;
    let mut factors = 0;
    while *pos < c.len() && c[*pos] != '+' && c[*pos] != '-' && c[*pos] != ')' && c[*pos] != ',' {
        acc *= eval_factor(c, pos, vals);
        factors += 1;
    }
    assert!(factors > 0, "empty product at {pos}");
    acc
}

fn eval_factor(c: &[char], pos: &mut usize, vals: &dyn Fn(char) -> i64) -> i64 {
    let rest: String = c[*pos..].iter().collect();
    if let Some(tail) = rest.strip_prefix("binom(") {
        let close = tail.find(')').expect("closing parenthesis");
        let (n, r) = tail[..close].split_once(',').expect("two binomial arguments");
        let n = eval_entry(n, vals);
        let r: i64 = r.parse().expect("numeric lower index");
        *pos += "binom(".len() + close + 1;
        return (0..r).fold(1, |acc, i| acc * (n - i) / (i + 1));
    }
    match c[*pos] {
        '(' => {
            *pos += 1;
            let v = eval_sum(c, pos, vals);
            assert_eq!(c[*pos], ')');
            *pos += 1;
            v
        }
        d if d.is_ascii_digit() => {
            let start = *pos;
            while *pos < c.len() && c[*pos].is_ascii_digit() {
                *pos += 1;
            }
            c[start..*pos].iter().collect::<String>().parse().unwrap()
        }
        v => {
            *pos += 1;
            vals(v)
        }
    }
}
