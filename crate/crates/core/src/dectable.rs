//! Approximate decomposition matrices of `Spin_{2n}^±(q)` and `Spin_{2n+1}(q)`.
//!
//! Each template is a lower unitriangular array whose entries are integer
//! expressions in the indicator flags `a..e` and `k`. Flags come from the
//! cyclotomic condition satisfied by `ℓ`; `k` is `n - 5` for type D and
//! `n - 4` for type B.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::cyclotomic::{is_prime, kappa, modpow, EllClass, EllTag};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DecKind {
    #[serde(rename = "D+")]
    DPlus,
    #[serde(rename = "D-")]
    DMinus,
    B,
}

impl DecKind {
    pub const ALL: [DecKind; 3] = [DecKind::DPlus, DecKind::DMinus, DecKind::B];

    pub fn min_rank(self) -> u32 {
        match self {
            DecKind::DPlus | DecKind::DMinus => 5,
            DecKind::B => 4,
        }
    }

    pub fn k(self, n: u32) -> u32 {
        n - self.min_rank()
    }

    /// Tag setting each of the flags `a, b, c, d, e`.
    pub fn flag_tags(self) -> [Option<EllTag>; 5] {
        use EllTag::*;
        match self {
            DecKind::DPlus => [Some(E3), Some(E4), Some(E5), Some(E6), Some(E8)],
            DecKind::DMinus => [Some(E3), Some(E4), Some(E6), Some(E8), Some(E10)],
            DecKind::B => [Some(E3), Some(E4), Some(E6), Some(E8), None],
        }
    }

    pub fn group_name(self) -> &'static str {
        match self {
            DecKind::DPlus => "Spin_{2n}^+(q)",
            DecKind::DMinus => "Spin_{2n}^-(q)",
            DecKind::B => "Spin_{2n+1}(q)",
        }
    }
}

impl fmt::Display for DecKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DecKind::DPlus => "D+",
            DecKind::DMinus => "D-",
            DecKind::B => "B",
        })
    }
}

impl FromStr for DecKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d+" | "dplus" | "spin+" => Ok(DecKind::DPlus),
            "d-" | "dminus" | "spin-" => Ok(DecKind::DMinus),
            "b" | "spinodd" => Ok(DecKind::B),
            _ => Err(Error::Parse(format!("unknown table kind {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Var {
    A,
    B,
    C,
    D,
    E,
    K,
}

impl Var {
    fn from_char(c: char) -> Option<Self> {
        Some(match c {
            'a' => Var::A,
            'b' => Var::B,
            'c' => Var::C,
            'd' => Var::D,
            'e' => Var::E,
            'k' => Var::K,
            _ => return None,
        })
    }

    fn symbol(self) -> char {
        match self {
            Var::A => 'a',
            Var::B => 'b',
            Var::C => 'c',
            Var::D => 'd',
            Var::E => 'e',
            Var::K => 'k',
        }
    }
}

/// Values of the flags and of `k`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Assignment {
    pub flags: [u8; 5],
    pub k: u32,
}

impl Assignment {
    pub fn get(&self, v: Var) -> i64 {
        match v {
            Var::A => i64::from(self.flags[0]),
            Var::B => i64::from(self.flags[1]),
            Var::C => i64::from(self.flags[2]),
            Var::D => i64::from(self.flags[3]),
            Var::E => i64::from(self.flags[4]),
            Var::K => i64::from(self.k),
        }
    }
}

/// Entry expression of a template.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Expr {
    Const(i64),
    Var(Var),
    Sum(Vec<Expr>),
    Prod(Vec<Expr>),
    /// `binom(k, 2)`
    Binom2K,
}

impl Expr {
    pub fn eval(&self, at: &Assignment) -> i64 {
        match self {
            Expr::Const(c) => *c,
            Expr::Var(v) => at.get(*v),
            Expr::Sum(xs) => xs.iter().map(|x| x.eval(at)).sum(),
            Expr::Prod(xs) => xs.iter().map(|x| x.eval(at)).product(),
            Expr::Binom2K => {
                let k = i64::from(at.k);
                k * (k - 1) / 2
            }
        }
    }

    pub fn parse(s: &str) -> Result<Expr> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = ExprParser { chars: &chars, pos: 0 };
        let e = p.sum()?;
        if p.pos != chars.len() {
            return Err(Error::Parse(format!("trailing input in expression {s:?}")));
        }
        Ok(e)
    }
}

struct ExprParser<'a> {
    chars: &'a [char],
    pos: usize,
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn err(&self) -> Error {
        Error::Parse(format!("bad expression at {} in {:?}", self.pos, self.chars.iter().collect::<String>()))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    terms.push(match self.term()? {
                        Expr::Const(x) => Expr::Const(-x),
                        t => Expr::Prod(vec![Expr::Const(-1), t]),
                    });
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 { terms.pop().expect("one term") } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = Vec::new();
        while let Some(c) = self.peek() {
            if c == '+' || c == '-' || c == ')' {
                break;
            }
            factors.push(self.factor()?);
        }
        match factors.len() {
            0 => Err(self.err()),
            1 => Ok(factors.pop().expect("one factor")),
            _ => Ok(Expr::Prod(factors)),
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let c = self.peek().ok_or_else(|| self.err())?;
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            return digits.parse().map(Expr::Const).map_err(|_| self.err());
        }
        if c == '(' {
            self.pos += 1;
            let inner = self.sum()?;
            if self.peek() != Some(')') {
                return Err(self.err());
            }
            self.pos += 1;
            return Ok(inner);
        }
        const BINOM: &str = "binom(k,2)";
        let rest: String = self.chars[self.pos..].iter().take(BINOM.len()).collect();
        if rest == BINOM {
            self.pos += BINOM.len();
            return Ok(Expr::Binom2K);
        }
        let v = Var::from_char(c).ok_or_else(|| self.err())?;
        self.pos += 1;
        Ok(Expr::Var(v))
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{c}"),
            Expr::Var(v) => write!(f, "{}", v.symbol()),
            Expr::Binom2K => f.write_str("binom(k,2)"),
            Expr::Sum(xs) => {
                for (i, x) in xs.iter().enumerate() {
                    match x {
                        Expr::Const(c) if *c < 0 => write!(f, "{c}")?,
                        _ if i == 0 => write!(f, "{x}")?,
                        _ => write!(f, "+{x}")?,
                    }
                }
                Ok(())
            }
            Expr::Prod(xs) => {
                for x in xs {
                    match x {
                        Expr::Sum(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TemplateRow {
    pub label: &'static str,
    pub a_value: u32,
    /// Entries up to and including the diagonal; `None` is a printed dot.
    pub entries: Vec<Option<Expr>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecTemplate {
    pub kind: DecKind,
    pub rows: Vec<TemplateRow>,
    /// Row counts after which a separator is drawn.
    pub row_blocks: Vec<usize>,
    /// Widths of the column groups.
    pub column_groups: Vec<usize>,
    /// The series line as printed, if the table has one.
    pub printed_series: Option<Vec<&'static str>>,
}

impl DecTemplate {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// Entry `(i, j)`, 0-based; zero above the diagonal and for dots.
    pub fn entry(&self, i: usize, j: usize) -> Option<&Expr> {
        self.rows[i].entries.get(j).and_then(Option::as_ref)
    }

    pub fn evaluate(&self, at: &Assignment) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entry(i, j).map_or(0, |e| e.eval(at))).collect()).collect()
    }

    /// Harish-Chandra series of each column for the given flags.
    pub fn resolved_series(&self, at: &Assignment) -> Vec<String> {
        let b = at.flags[1] == 1;
        match self.kind {
            DecKind::DPlus => self.printed_series.as_ref().expect("printed").iter().map(|s| s.to_string()).collect(),
            DecKind::DMinus => (0..self.size())
                .map(|j| if j == 7 && b { "2D_2".to_string() } else { "ps".to_string() })
                .collect(),
            DecKind::B => self
                .printed_series
                .as_ref()
                .expect("printed")
                .iter()
                .map(|&s| match s {
                    "ps/.1^2" if b => ".1^2".to_string(),
                    "ps/.1^2" => "ps".to_string(),
                    other => other.to_string(),
                })
                .collect(),
        }
    }
}

type RowSpec = (&'static str, u32, &'static [&'static str]);

const SPIN_PLUS: &[RowSpec] = &[
    ("(n|0)", 0, &["1"]),
    ("(n-1|1)", 1, &["e+k", "1"]),
    ("(1,n|0,1)", 2, &["c+k", ".", "1"]),
    ("(3|2)", 2, &["b+d+ke+binom(k,2)", "b+k", ".", "1"]),
    ("(0,1,2,n-1|-)", 3, &[".", ".", ".", ".", "1"]),
    ("(0,n-1|1,2)", 3, &["ke+binom(k,2)", "e+k", ".", ".", ".", "1"]),
    ("(1,n-1|0,2)", 3, &["k(c+e+k-1)", "b+k", "d+k", "b", ".", ".", "1"]),
    ("(2,n-1|0,1)", 3, &["b+kc+binom(k,2)", ".", "a+k", ".", ".", ".", ".", "1"]),
];

const SPIN_MINUS: &[RowSpec] = &[
    ("(n-1;-)", 0, &["1"]),
    ("(n-2,1;-)", 1, &["b+k", "1"]),
    ("(n-2;1)", 2, &["e+k", ".", "1"]),
    ("(n-3,2;-)", 2, &["a+kb+binom(k,2)", "k", ".", "1"]),
    ("(n-3,1^2;-)", 3, &["kb+binom(k,2)", "b+k", ".", ".", "1"]),
    ("(n-3,1;1)", 3, &["k(b+e+k-1)", "d+k", "a+k", "b", ".", "1"]),
    ("(n-3;2)", 3, &["d+ke+binom(k,2)", ".", "c+k", ".", ".", ".", "1"]),
    ("(-;n-1)", 3, &["b", ".", ".", ".", ".", ".", ".", "1"]),
];

const SPIN_ODD: &[RowSpec] = &[
    ("(n|-)", 0, &["1"]),
    ("(0,1,n|-)", 1, &[".", "1"]),
    ("(0,1|n)", 1, &[".", ".", "1"]),
    ("(1,n|0)", 1, &["b+k", ".", ".", "1"]),
    ("(0,n|1)", 1, &["d+k", ".", ".", ".", "1"]),
    ("(0,2,n-1|-)", 2, &[".", "k", ".", ".", ".", "1"]),
    ("(0,2|n-1)", 2, &["b", ".", "b+k", ".", ".", ".", "1"]),
    ("(2,n-1|0)", 2, &["a+kb+binom(k,2)", ".", ".", "k", ".", ".", ".", "1"]),
    ("(0,n-1|2)", 2, &["c+kd+binom(k,2)", ".", ".", ".", "b+k", ".", ".", ".", "1"]),
    ("(1,n-1|1)", 3, &["k(b+d+k-1)", ".", ".", "c+k", "a+k", ".", ".", ".", ".", "1"]),
    ("(0,1,2,n|1)", 4, &[".", "d+k", ".", ".", ".", "b", ".", ".", ".", ".", "1"]),
    ("(0,1,2|1,n)", 4, &[".", ".", "b+k", ".", ".", ".", "b", ".", ".", ".", ".", "1"]),
    ("(1,2,n|0,1)", 4, &["kb+binom(k,2)", ".", ".", "b+k", ".", ".", ".", ".", ".", ".", ".", ".", "1"]),
    ("(0,1,n|1,2)", 4, &["kd+binom(k,2)", ".", ".", ".", "d+k", ".", ".", ".", ".", ".", ".", ".", ".", "1"]),
];

fn build(kind: DecKind, spec: &[RowSpec], row_blocks: &[usize], column_groups: &[usize], series: Option<&[&'static str]>) -> DecTemplate {
    let rows = spec
        .iter()
        .map(|&(label, a_value, entries)| TemplateRow {
            label,
            a_value,
            entries: entries
                .iter()
                .map(|&e| (e != ".").then(|| Expr::parse(e).expect("template entries parse")))
                .collect(),
        })
        .collect();
    DecTemplate {
        kind,
        rows,
        row_blocks: row_blocks.to_vec(),
        column_groups: column_groups.to_vec(),
        printed_series: series.map(<[_]>::to_vec),
    }
}

pub fn template(kind: DecKind) -> &'static DecTemplate {
    static PLUS: OnceLock<DecTemplate> = OnceLock::new();
    static MINUS: OnceLock<DecTemplate> = OnceLock::new();
    static ODD: OnceLock<DecTemplate> = OnceLock::new();
    match kind {
        DecKind::DPlus => PLUS.get_or_init(|| {
            build(
                kind,
                SPIN_PLUS,
                &[3, 4, 8],
                &[3, 1, 4],
                Some(&["ps", "ps", "ps", "ps", "D_4", "ps", "ps", "ps"]),
            )
        }),
        DecKind::DMinus => MINUS.get_or_init(|| build(kind, SPIN_MINUS, &[3, 4, 8], &[3, 1, 4], None)),
        DecKind::B => ODD.get_or_init(|| {
            build(
                kind,
                SPIN_ODD,
                &[1, 5, 9, 10, 14],
                &[1, 4, 4, 1, 4],
                Some(&["ps", "B_2", "ps", "ps", "ps", "B_2", "ps", "ps", "ps", "ps", "B_2", "ps/.1^2", "ps", "ps"]),
            )
        }),
    }
}

/// Flags for `kind` from the active condition of `ℓ`.
pub fn flags_for(kind: DecKind, ell: &EllClass) -> Result<[u8; 5]> {
    if ell.is_active(EllTag::E2) {
        return Err(Error::Precondition("ℓ divides q+1".into()));
    }
    let tags = kind.flag_tags();
    let mut flags = [0u8; 5];
    for (flag, tag) in flags.iter_mut().zip(tags) {
        *flag = u8::from(tag.is_some_and(|t| ell.is_active(t)));
    }
    if flags.iter().sum::<u8>() > 1 {
        return Err(Error::Precondition(format!("more than one flag set by {ell}")));
    }
    Ok(flags)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecMatrixRow {
    pub label: &'static str,
    pub a_value: u32,
    pub entries: Vec<i64>,
}

/// A template evaluated at a rank and an ℓ-class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecMatrix {
    pub kind: DecKind,
    pub n: u32,
    pub k: u32,
    pub flags: [u8; 5],
    pub rows: Vec<DecMatrixRow>,
    pub row_blocks: Vec<usize>,
    pub column_groups: Vec<usize>,
    pub printed_series: Option<Vec<String>>,
    pub series: Vec<String>,
}

pub fn dec_table(kind: DecKind, n: u32, ell: &EllClass) -> Result<DecMatrix> {
    if n < kind.min_rank() {
        return Err(Error::RankBelowThreshold(format!("{kind} needs n ≥ {}, got {n}", kind.min_rank())));
    }
    let flags = flags_for(kind, ell)?;
    Ok(evaluate_template(kind, Assignment { flags, k: kind.k(n) }))
}

/// Evaluates the template at an explicit assignment; `n` is recovered from `k`.
pub fn evaluate_template(kind: DecKind, at: Assignment) -> DecMatrix {
    let t = template(kind);
    let values = t.evaluate(&at);
    DecMatrix {
        kind,
        n: at.k + kind.min_rank(),
        k: at.k,
        flags: at.flags,
        rows: t
            .rows
            .iter()
            .zip(values)
            .map(|(r, entries)| DecMatrixRow { label: r.label, a_value: r.a_value, entries })
            .collect(),
        row_blocks: t.row_blocks.clone(),
        column_groups: t.column_groups.clone(),
        printed_series: t.printed_series.as_ref().map(|s| s.iter().map(|x| x.to_string()).collect()),
        series: t.resolved_series(&at),
    }
}

impl DecMatrix {
    pub fn is_lower_unitriangular(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.entries.iter().enumerate().all(|(j, &x)| match j.cmp(&i) {
                std::cmp::Ordering::Less => x >= 0,
                std::cmp::Ordering::Equal => x == 1,
                std::cmp::Ordering::Greater => x == 0,
            })
        })
    }
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:>w$}", w = w)
}

impl fmt::Display for DecMatrix {
    /// Lower triangle with dots for zeros, separators between row blocks and
    /// `|` between column groups.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = self.rows.len();
        let label_w = self.rows.iter().map(|r| r.label.chars().count()).max().unwrap_or(0).max(9);
        let cell = |i: usize, j: usize| -> String {
            let x = self.rows[i].entries[j];
            if x == 0 {
                ".".to_string()
            } else {
                x.to_string()
            }
        };
        let col_w = (0..size)
            .map(|j| {
                let mut w = self.series.get(j).map_or(1, |s| s.chars().count());
                for i in j..size {
                    w = w.max(cell(i, j).len());
                }
                w
            })
            .collect::<Vec<_>>();
        let group_starts: Vec<usize> = self
            .column_groups
            .iter()
            .scan(0, |acc, &w| {
                let start = *acc;
                *acc += w;
                Some(start)
            })
            .skip(1)
            .collect();
        let line = |label: &str, a: &str, cells: Vec<String>| -> String {
            let mut out = format!("{label:<label_w$} | {a:>2} |");
            for (j, c) in cells.iter().enumerate() {
                if group_starts.contains(&j) {
                    out.push_str(" |");
                }
                out.push(' ');
                out.push_str(&pad(c, col_w[j]));
            }
            out.trim_end().to_string()
        };
        writeln!(
            f,
            "{} n={} k={} (a,b,c,d,e)=({})",
            self.kind.group_name(),
            self.n,
            self.k,
            self.flags.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
        )?;
        let header_width = label_w + 7 + col_w.iter().map(|w| w + 1).sum::<usize>() + 2 * group_starts.len();
        let rule = "-".repeat(header_width);
        writeln!(f, "{}", line("rho", "a", Vec::new()))?;
        writeln!(f, "{rule}")?;
        for (i, r) in self.rows.iter().enumerate() {
            writeln!(f, "{}", line(r.label, &r.a_value.to_string(), (0..=i).map(|j| cell(i, j)).collect()))?;
            if self.row_blocks.contains(&(i + 1)) {
                writeln!(f, "{rule}")?;
            }
        }
        write!(f, "{}", line("HC-series", "", self.series.clone()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SmallKind {
    /// `Spin_{2n}^+` for `true`, `Spin_{2n}^-` for `false`.
    Dpm { plus: bool },
    B,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallMatrix {
    pub kind: SmallKind,
    pub n: u32,
    pub q: u64,
    pub ell: u64,
    pub a: u8,
    pub b: u8,
    pub labels: Vec<&'static str>,
    pub entries: Vec<Vec<u8>>,
}

impl SmallMatrix {
    pub fn column_sums(&self) -> Vec<u32> {
        let n = self.entries.len();
        (0..n).map(|j| self.entries.iter().map(|r| u32::from(r[j])).sum()).collect()
    }
}

impl fmt::Display for SmallMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (label, row)) in self.labels.iter().zip(&self.entries).enumerate() {
            let cells: Vec<String> =
                row[..=i].iter().map(|&x| if x == 0 { ".".to_string() } else { x.to_string() }).collect();
            write!(f, "{label:<4} | {}", cells.join(" "))?;
            if i + 1 < self.labels.len() {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

fn check_prime_power(q: u64) -> Result<()> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).ok_or_else(|| Error::Precondition(format!("q = {q} < 2")))?;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    if rest != 1 {
        return Err(Error::Precondition(format!("q = {q} is not a prime power")));
    }
    Ok(())
}

/// `1 + q + ... + q^{m-1} mod ℓ`.
fn geometric_mod(q: u64, m: u64, ell: u64) -> u64 {
    let (qm, l) = (u128::from(q % ell), u128::from(ell));
    let mut acc = 0u128;
    let mut power = 1u128 % l;
    for _ in 0..m {
        acc = (acc + power) % l;
        power = power * qm % l;
    }
    acc as u64
}

/// Decomposition of the first three (type D) or five (type B) unipotent
/// characters.
pub fn dec_small(kind: SmallKind, n: u32, q: u64, ell: u64) -> Result<SmallMatrix> {
    check_prime_power(q)?;
    if !is_prime(ell) {
        return Err(Error::Precondition(format!("ℓ = {ell} is not prime")));
    }
    if q.is_multiple_of(ell) || (q + 1).is_multiple_of(ell) {
        return Err(Error::Precondition(format!("ℓ = {ell} divides q(q+1)")));
    }
    let n64 = u64::from(n);
    match kind {
        SmallKind::Dpm { plus } => {
            if n < 3 {
                return Err(Error::RankBelowThreshold(format!("n = {n} < 3")));
            }
            let s = if plus { 1 } else { -1 };
            let a = kappa(ell, q, n64 - 1, s);
            let b = kappa(ell, q, n64, -s);
            Ok(SmallMatrix {
                kind,
                n,
                q,
                ell,
                a,
                b,
                labels: vec!["1", "ρ2", "ρ3"],
                entries: vec![vec![1, 0, 0], vec![a, 1, 0], vec![b, 0, 1]],
            })
        }
        SmallKind::B => {
            if n < 2 {
                return Err(Error::RankBelowThreshold(format!("n = {n} < 2")));
            }
            if ell == 2 {
                return Err(Error::Precondition("ℓ must be odd".into()));
            }
            let (a, b) = if geometric_mod(q, 2 * n64, ell) == 0 {
                let a = u8::from(modpow(q, n64, ell) == 1 % ell);
                (a, 1 - a)
            } else {
                (0, 0)
            };
            let mut entries = vec![vec![0u8; 5]; 5];
            for (i, row) in entries.iter_mut().enumerate() {
                row[i] = 1;
            }
            entries[3][0] = a;
            entries[4][0] = b;
            Ok(SmallMatrix { kind, n, q, ell, a, b, labels: vec!["1", "ρ2", "ρ3", "ρ4", "ρ5"], entries })
        }
    }
}

/// A polynomial in `q` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapBound {
    /// `(coefficient, exponent)`, highest exponent first.
    #[serde(serialize_with = "serialize_terms")]
    pub terms: Vec<(BigRational, u32)>,
}

fn serialize_terms<S: serde::Serializer>(terms: &[(BigRational, u32)], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(terms.len()))?;
    for (c, e) in terms {
        seq.serialize_element(&(c.to_string(), e))?;
    }
    seq.end()
}

impl GapBound {
    pub fn eval(&self, q: &BigInt) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (c, e)| {
            acc + c * BigRational::from_integer(num_traits::pow(q.clone(), *e as usize))
        })
    }

    /// True if a degree `deg` lies strictly below the bound at `q`.
    pub fn is_below(&self, deg: &BigInt, q: &BigInt) -> bool {
        BigRational::from_integer(deg.clone()) < self.eval(q)
    }
}

impl fmt::Display for GapBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, e)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "q^{e}")?;
        }
        Ok(())
    }
}

/// Degree threshold below which a constituent of the template rows already
/// lies among the first few rows.
pub fn degree_gap_bound(kind: DecKind, n: u32) -> Result<GapBound> {
    if n < kind.min_rank() {
        return Err(Error::RankBelowThreshold(format!("{kind} needs n ≥ {}, got {n}", kind.min_rank())));
    }
    let one = BigRational::one();
    let terms = match kind {
        DecKind::DPlus => vec![(one, 4 * n - 10)],
        DecKind::DMinus => vec![(one.clone(), 4 * n - 10), (-one, 9)],
        DecKind::B => vec![
            (BigRational::new(BigInt::from(1), BigInt::from(2)), 4 * n - 6),
            (-one, 3 * n - 3),
        ],
    };
    Ok(GapBound { terms })
}
