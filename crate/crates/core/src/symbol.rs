//! Symbols for type D.
//!
//! Cuspidal classes of `D_m` and `2D_m` are routed through Springer symbols
//! to get the a-value of their dual class: `a(S*) = m(m-1) - A(S)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cuspidal::{is_cuspidal, ClassLabel};
use crate::error::{Error, Result};
use crate::group::{GroupSpec, Scheme};

/// Two-row symbol with rows of equal length `s >= 1`.
///
/// Entries are indexed `a_1, ..., a_{2s}`: odd indices go to the top row,
/// even indices to the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DSymbol {
    top: Vec<u32>,
    bottom: Vec<u32>,
    rank: u32,
}

impl DSymbol {
    pub fn new(top: Vec<u32>, bottom: Vec<u32>, rank: u32) -> Result<Self> {
        if top.is_empty() || top.len() != bottom.len() {
            return Err(Error::InvalidSymbol(format!(
                "rows of lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        for row in [&top, &bottom] {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidSymbol(format!("row {row:?} is not strictly increasing")));
            }
        }
        Ok(Self { top, bottom, rank })
    }

    /// Builds the symbol from the interleaved sequence `a_1, ..., a_{2s}`.
    pub fn from_interleaved(entries: &[u32], rank: u32) -> Result<Self> {
        if entries.len() % 2 == 1 {
            return Err(Error::InvalidSymbol(format!("{} entries", entries.len())));
        }
        let top = entries.iter().step_by(2).copied().collect();
        let bottom = entries.iter().skip(1).step_by(2).copied().collect();
        Self::new(top, bottom, rank)
    }

    pub fn top(&self) -> &[u32] {
        &self.top
    }

    pub fn bottom(&self) -> &[u32] {
        &self.bottom
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Row length `s`.
    pub fn s(&self) -> usize {
        self.top.len()
    }

    pub fn interleaved(&self) -> Vec<u32> {
        self.top.iter().zip(&self.bottom).flat_map(|(&t, &b)| [t, b]).collect()
    }
}

impl fmt::Display for DSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |row: &[u32]| row.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.top), join(&self.bottom))
    }
}

fn check_orthogonal_even(g: GroupSpec) -> Result<()> {
    if g.family().is_orthogonal_even() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("symbols are only defined here for D and 2D, not {g}")))
    }
}

/// Springer symbol of a cuspidal class of `D_m` or `2D_m`.
pub fn springer_symbol(c: &ClassLabel) -> Result<DSymbol> {
    check_orthogonal_even(c.group())?;
    let parts = c.partition().parts();
    if parts.len() % 2 == 1 || !is_cuspidal(c) {
        return Err(Error::NotCuspidalDLabel(c.to_string()));
    }
    let len = parts.len();
    let mut entries = Vec::with_capacity(len);
    for i in 1..=len {
        // λ_{2l+1-i}, 1-based, is the i-th part from the end
        let lambda = parts[len - i];
        if lambda.is_multiple_of(2) {
            return Err(Error::InvalidParity(c.to_string()));
        }
        entries.push((lambda - 1) / 2 + (i as u32) / 2);
    }
    DSymbol::from_interleaved(&entries, c.rank())
}

pub fn is_special(sym: &DSymbol) -> bool {
    sym.interleaved().windows(2).all(|w| w[0] <= w[1])
}

fn binom2(x: i64) -> i64 {
    x * (x - 1) / 2
}

/// `A(S)` on an arbitrary multiset of `2s` entries.
pub fn upper_a_value_of_entries(entries: &[u32], rank: u32) -> i64 {
    let mut sorted: Vec<i64> = entries.iter().map(|&x| i64::from(x)).collect();
    sorted.sort_unstable();
    // the j-th smallest entry is the max of exactly j pairs
    let pair_max: i64 = sorted.iter().enumerate().map(|(j, &x)| j as i64 * x).sum();
    let s = (sorted.len() / 2) as i64;
    let staircase: i64 = (1..s).map(|i| binom2(2 * i)).sum();
    let tri: i64 = sorted.iter().map(|&a| binom2(a + 1)).sum();
    let m = i64::from(rank);
    pair_max - staircase - 2 * tri + m * m
}

pub fn upper_a_value(sym: &DSymbol) -> i64 {
    upper_a_value_of_entries(&sym.interleaved(), sym.rank)
}

/// `a_{d(C)}` for a cuspidal class of `D_m` or `2D_m`.
pub fn a_dual_via_symbol(c: &ClassLabel) -> Result<u64> {
    let sym = springer_symbol(c)?;
    let m = i64::from(c.rank());
    let value = m * (m - 1) - upper_a_value(&sym);
    u64::try_from(value).map_err(|_| Error::InvalidSymbol(format!("negative dual a-value for {sym}")))
}

/// The symbol of the minimal cuspidal class, read off from `m = s^2 + d`.
pub fn s_min_symbol(g: GroupSpec) -> Result<DSymbol> {
    check_orthogonal_even(g)?;
    let dec = g.rank_decompose().expect("D and 2D have a rank decomposition");
    debug_assert_eq!(dec.scheme, Scheme::D);
    let (s, d) = (dec.s, dec.d);
    let (top, bottom): (Vec<u32>, Vec<u32>) = if d <= s {
        let top = (0..s).map(|i| 2 * i).collect();
        let odd = (0..s - d).map(|i| 2 * i + 1);
        let even = (s - d + 1..=s).map(|i| 2 * i);
        (top, odd.chain(even).collect())
    } else {
        let even = (0..2 * s - d).map(|i| 2 * i);
        let odd = (0..d - s).map(|i| 2 * (2 * s - d) + 1 + 2 * i);
        (even.chain(odd).collect(), (1..=s).map(|i| 2 * i).collect())
    };
    DSymbol::new(top, bottom, g.rank())
}
