//! Integer partitions: the labels of unipotent classes in classical groups.
//!
//! A [`Partition`] is stored as a weakly decreasing sequence of positive
//! parts. Dominance order compares prefix sums, padding the shorter
//! partition with zeros.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
    size: u32,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size = parts.iter().sum();
        Ok(Self { parts, size })
    }

    /// Sorts the given parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Self { parts, size }
    }

    /// The partition `(n)` with a single part; empty for `n = 0`.
    pub fn single_row(n: u32) -> Self {
        if n == 0 {
            Self::default()
        } else {
            Self { parts: vec![n], size: n }
        }
    }

    /// The partition `(1^n)`.
    pub fn single_column(n: u32) -> Self {
        Self { parts: vec![1; n as usize], size: n }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), reading missing parts as 0.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest_part() as usize;
        let mut parts = Vec::with_capacity(width);
        for i in 1..=self.largest_part() {
            parts.push(self.parts.iter().take_while(|&&p| p >= i).count() as u32);
        }
        debug_assert_eq!(parts.len(), width);
        Partition { parts, size: self.size }
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size != other.size {
            return Err(Error::IncomparableSizes(self.size, other.size));
        }
        let len = self.len().max(other.len());
        let (mut lhs, mut rhs) = (0u32, 0u32);
        for i in 0..len {
            lhs += self.part(i);
            rhs += other.part(i);
            if lhs < rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dominance comparison, `None` when the two are incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Result<Option<Ordering>> {
        let ge = self.dominates(other)?;
        let le = other.dominates(self)?;
        Ok(match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        })
    }

    /// Exponential form: part -> number of times it occurs.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == part).count() as u32
    }

    pub fn odd_part_count(&self) -> u32 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u32
    }

    /// Sum of squares of the parts of the conjugate partition.
    pub fn conjugate_square_sum(&self) -> u64 {
        self.conjugate().parts.iter().map(|&c| u64::from(c) * u64::from(c)).sum()
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Returns the partition with `amount` added to its largest part.
    pub fn with_first_part_increased(&self, amount: u32) -> Partition {
        let mut parts = self.parts.clone();
        match parts.first_mut() {
            Some(first) => *first += amount,
            None if amount > 0 => parts.push(amount),
            None => {}
        }
        Partition { parts, size: self.size + amount }
    }

    /// Compact notation with caret exponents, e.g. `531^2` or `13.1`.
    ///
    /// Parts of two or more digits force dot separators between groups.
    pub fn to_compact(&self) -> String {
        if self.is_empty() {
            return "-".to_string();
        }
        let dotted = self.largest_part() >= 10;
        let mut groups = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            let count = j - i;
            groups.push(match count {
                1 => p.to_string(),
                c if c < 10 => format!("{p}^{c}"),
                c => format!("{p}^{{{c}}}"),
            });
            i = j;
        }
        groups.join(if dotted { "." } else { "" })
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        fill(n, n, &mut current, &mut out);
        out
    }

    /// Partitions of `n` whose parts satisfy `part_ok` and whose
    /// multiplicities are at most `max_mult`.
    pub fn all_restricted(n: u32, max_mult: u32, part_ok: impl Fn(u32) -> bool) -> Vec<Partition> {
        Self::all(n)
            .into_iter()
            .filter(|p| p.parts.iter().all(|&x| part_ok(x)))
            .filter(|p| p.multiplicities().values().all(|&m| m <= max_mult))
            .collect()
    }
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone(), size: current.iter().sum() });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    /// Canonical emission: comma-separated decreasing parts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `5,3,1,1`, `5+3+1+1`, compact `531^2`, `3^21^2`, `1^{12}`
    /// and dotted `13.1`. The empty partition is `-`, `()` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let cleaned = cleaned.trim_start_matches('(').trim_end_matches(')');
        if cleaned.is_empty() || cleaned == "-" || cleaned == "0" {
            return Ok(Partition::empty());
        }
        let parts = if cleaned.contains(',') || cleaned.contains('+') {
            cleaned
                .split([',', '+'])
                .map(|t| parse_group(t, s))
                .collect::<Result<Vec<_>>>()?
                .concat()
        } else if cleaned.contains('.') {
            cleaned.split('.').map(|t| parse_group(t, s)).collect::<Result<Vec<_>>>()?.concat()
        } else {
            parse_compact(cleaned, s)?
        };
        if parts.contains(&0) {
            return Err(Error::Parse(format!("zero part in {s:?}")));
        }
        Ok(Partition::from_unsorted(parts))
    }
}

/// A single multi-digit part with optional exponent: `11`, `5^2`, `1^{12}`.
fn parse_group(token: &str, whole: &str) -> Result<Vec<u32>> {
    let err = || Error::Parse(format!("bad part {token:?} in {whole:?}"));
    let (base, exp) = match token.split_once('^') {
        Some((b, e)) => (b, e.trim_start_matches('{').trim_end_matches('}')),
        None => (token, "1"),
    };
    let base: u32 = base.parse().map_err(|_| err())?;
    let exp: usize = exp.parse().map_err(|_| err())?;
    Ok(vec![base; exp])
}

/// Single-digit parts, each optionally followed by `^d` or `^{dd}`.
fn parse_compact(token: &str, whole: &str) -> Result<Vec<u32>> {
    let err = || Error::Parse(format!("bad compact partition {whole:?}"));
    let chars: Vec<char> = token.chars().collect();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let base = chars[i].to_digit(10).ok_or_else(err)?;
        i += 1;
        let mut exp = 1usize;
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            if i < chars.len() && chars[i] == '{' {
                let close = chars[i..].iter().position(|&c| c == '}').ok_or_else(err)? + i;
                let digits: String = chars[i + 1..close].iter().collect();
                exp = digits.parse().map_err(|_| err())?;
                i = close + 1;
            } else {
                exp = chars.get(i).and_then(|c| c.to_digit(10)).ok_or_else(err)? as usize;
                i += 1;
            }
        }
        parts.extend(std::iter::repeat_n(base, exp));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[4, 2]).conjugate(), p(&[2, 2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[5, 3]).dominates(&p(&[3, 3, 1, 1])).unwrap());
        assert!(p(&[7, 1]).dominates(&p(&[7, 1])).unwrap());
        let (a, b) = (p(&[3, 1, 1, 1]), p(&[2, 2, 2]));
        assert!(!a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert_eq!(a.dominance_cmp(&b).unwrap(), None);
    }

    #[test]
    fn dominance_rejects_size_mismatch() {
        let err = p(&[3]).dominates(&p(&[2, 2])).unwrap_err();
        assert_eq!(err, Error::IncomparableSizes(3, 4));
        assert!(err.to_string().contains("incomparable sizes"));
    }

    #[test]
    fn multiplicities_and_odd_parts() {
        let m = p(&[3, 3, 1, 1]).multiplicities();
        assert_eq!(m.into_iter().collect::<Vec<_>>(), vec![(1, 2), (3, 2)]);
        assert_eq!(p(&[4, 2]).multiplicities().into_iter().collect::<Vec<_>>(), vec![(2, 1), (4, 1)]);
        assert!(Partition::empty().multiplicities().is_empty());

        assert_eq!(p(&[3, 1, 1]).odd_part_count(), 3);
        assert_eq!(p(&[4, 2]).odd_part_count(), 0);
        assert_eq!(p(&[5, 3, 1, 1]).odd_part_count(), 4);
    }

    #[test]
    fn constructor_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_unsorted(vec![1, 0, 3, 1]), p(&[3, 1, 1]));
        assert_eq!(p(&[3, 1, 1]).size(), 5);
    }

    #[test]
    fn parse_all_notations() {
        let target = p(&[5, 3, 1, 1]);
        for s in ["5,3,1,1", "5+3+1+1", "531^2", "5 3 1 1", "(5,3,1,1)", "5^13^11^2"] {
            assert_eq!(s.parse::<Partition>().unwrap(), target, "{s}");
        }
        assert_eq!("13.1".parse::<Partition>().unwrap(), p(&[13, 1]));
        assert_eq!("11.3".parse::<Partition>().unwrap(), p(&[11, 3]));
        assert_eq!("3^21^2".parse::<Partition>().unwrap(), p(&[3, 3, 1, 1]));
        assert_eq!("5^2 31".parse::<Partition>().unwrap(), p(&[5, 5, 3, 1]));
        assert_eq!("1^{12}".parse::<Partition>().unwrap(), Partition::single_column(12));
        assert_eq!("-".parse::<Partition>().unwrap(), Partition::empty());
        assert!("5,x".parse::<Partition>().is_err());
        assert!("5^".parse::<Partition>().is_err());
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(p(&[5, 3, 1, 1]).to_compact(), "531^2");
        assert_eq!(p(&[9, 1]).to_compact(), "91");
        assert_eq!(p(&[13, 1]).to_compact(), "13.1");
        assert_eq!(p(&[5, 5, 1, 1]).to_compact(), "5^21^2");
        assert_eq!(Partition::single_column(12).to_compact(), "1^{12}");
        assert_eq!(p(&[5, 3, 1, 1]).to_string(), "5,3,1,1");
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let all6 = Partition::all(6);
        assert_eq!(all6.first().unwrap(), &p(&[6]));
        assert_eq!(all6.last().unwrap(), &Partition::single_column(6));
    }

    #[test]
    fn first_part_increase() {
        assert_eq!(p(&[3, 3, 1]).with_first_part_increased(2), p(&[5, 3, 1]));
        assert_eq!(Partition::empty().with_first_part_increased(2), p(&[2]));
    }
}
