//! Classical group bookkeeping: family tags, carrier sizes and the rank
//! decompositions that feed the closed-form minimal a-values.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    #[serde(rename = "2A")]
    TwistedA,
    B,
    C,
    D,
    #[serde(rename = "2D")]
    TwistedD,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::A, Family::TwistedA, Family::B, Family::C, Family::D, Family::TwistedD];

    pub fn min_rank(self) -> u32 {
        match self {
            Family::A | Family::TwistedA => 1,
            Family::B | Family::C | Family::TwistedD => 2,
            Family::D => 4,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::TwistedA => "2A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwistedD => "2D",
        }
    }

    /// D and 2D share label criteria and a-value formulas.
    pub fn is_orthogonal_even(self) -> bool {
        matches!(self, Family::D | Family::TwistedD)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "2A" => Ok(Family::TwistedA),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "2D" => Ok(Family::TwistedD),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A simple classical group of adjoint type, up to isogeny.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    family: Family,
    rank: u32,
}

impl GroupSpec {
    pub fn new(family: Family, rank: u32) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidGroup(format!(
                "{}{rank}: rank must be at least {}",
                family.tag(),
                family.min_rank()
            )));
        }
        Ok(Self { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Size of the partitions labelling unipotent classes.
    pub fn carrier_size(&self) -> u32 {
        carrier_size(self.family, self.rank)
    }

    pub fn rank_decompose(&self) -> Option<RankDecomposition> {
        RankDecomposition::for_group(self)
    }
}

pub fn carrier_size(family: Family, rank: u32) -> u32 {
    match family {
        Family::A | Family::TwistedA => rank + 1,
        Family::B => 2 * rank + 1,
        Family::C | Family::D | Family::TwistedD => 2 * rank,
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.tag(), self.rank)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Parses `B7`, `2D5`, `2a9`, `D_5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().replace('_', "");
        let split = if s.starts_with('2') { 2 } else { 1 };
        if s.len() <= split || !s.is_char_boundary(split) {
            return Err(Error::Parse(format!("bad group name {s:?}")));
        }
        let (fam, rank) = s.split_at(split);
        let family: Family = fam.parse()?;
        let rank: u32 = rank.parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        GroupSpec::new(family, rank)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Scheme {
    /// `m + 1 = s(s+1)/2 + d`, `0 <= d <= s`.
    TwistedA,
    /// `m = s(s+1) + d`, `0 <= d <= 2s + 1`.
    BC,
    /// `m = s^2 + d`, `0 <= d <= 2s`.
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RankDecomposition {
    pub s: u32,
    pub d: u32,
    pub scheme: Scheme,
}

impl RankDecomposition {
    /// `None` for untwisted type A, which has no decomposition scheme.
    pub fn for_group(g: &GroupSpec) -> Option<Self> {
        let m = g.rank();
        let scheme = match g.family() {
            Family::A => return None,
            Family::TwistedA => Scheme::TwistedA,
            Family::B | Family::C => Scheme::BC,
            Family::D | Family::TwistedD => Scheme::D,
        };
        let (target, base, width): (u32, fn(u32) -> u32, fn(u32) -> u32) = match scheme {
            Scheme::TwistedA => (m + 1, |s| s * (s + 1) / 2, |s| s),
            Scheme::BC => (m, |s| s * (s + 1), |s| 2 * s + 1),
            Scheme::D => (m, |s| s * s, |s| 2 * s),
        };
        let mut s = 0;
        while base(s + 1) <= target {
            s += 1;
        }
        let d = target - base(s);
        assert!(d <= width(s), "rank decomposition out of range for {g}");
        Some(Self { s, d, scheme })
    }

    pub fn is_valid(&self, rank: u32) -> bool {
        match self.scheme {
            Scheme::TwistedA => rank + 1 == self.s * (self.s + 1) / 2 + self.d && self.d <= self.s,
            Scheme::BC => rank == self.s * (self.s + 1) + self.d && self.d <= 2 * self.s + 1,
            Scheme::D => rank == self.s * self.s + self.d && self.d <= 2 * self.s,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn carrier_sizes() {
        assert_eq!(g("B3").carrier_size(), 7);
        assert_eq!(g("2A5").carrier_size(), 6);
        assert_eq!(g("D4").carrier_size(), 8);
        assert_eq!(g("C3").carrier_size(), 6);
        assert_eq!(g("A3").carrier_size(), 4);
    }

    #[test]
    fn decomposition_examples() {
        let b9 = g("B9").rank_decompose().unwrap();
        assert_eq!((b9.s, b9.d, b9.scheme), (2, 3, Scheme::BC));
        let d8 = g("D8").rank_decompose().unwrap();
        assert_eq!((d8.s, d8.d, d8.scheme), (2, 4, Scheme::D));
        let a9 = g("2A9").rank_decompose().unwrap();
        assert_eq!((a9.s, a9.d, a9.scheme), (4, 0, Scheme::TwistedA));
        assert!(g("A5").rank_decompose().is_none());
    }

    #[test]
    fn decomposition_is_unique_by_scan() {
        for family in [Family::TwistedA, Family::B, Family::C, Family::D, Family::TwistedD] {
            for m in family.min_rank()..=200 {
                let spec = GroupSpec::new(family, m).unwrap();
                let dec = spec.rank_decompose().unwrap();
                let candidates: Vec<(u32, u32)> = (0..=30)
                    .flat_map(|s| (0..=70).map(move |d| (s, d)))
                    .filter(|&(s, d)| RankDecomposition { s, d, scheme: dec.scheme }.is_valid(m))
                    .collect();
                assert_eq!(candidates, vec![(dec.s, dec.d)], "{spec}");
            }
        }
    }

    #[test]
    fn parse_and_validate() {
        assert_eq!(g("2d5"), GroupSpec::new(Family::TwistedD, 5).unwrap());
        assert_eq!(g("D_5").to_string(), "D_5");
        assert!("D3".parse::<GroupSpec>().is_err());
        assert!("D2".parse::<GroupSpec>().is_err());
        assert!("2D2".parse::<GroupSpec>().is_ok());
        assert!("2D3".parse::<GroupSpec>().is_ok());
        assert!("B1".parse::<GroupSpec>().is_err());
        assert!("A0".parse::<GroupSpec>().is_err());
        assert!("X4".parse::<GroupSpec>().is_err());
        assert!("2".parse::<GroupSpec>().is_err());
    }
}
