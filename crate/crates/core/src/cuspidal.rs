//! Cuspidal unipotent classes of classical groups.
//!
//! Labels are Jordan-type partitions. This module decides cuspidality,
//! enumerates the cuspidal classes of a group, finds the unique
//! dominance-minimal one, and evaluates centralizer dimensions and
//! Springer-fibre dimensions (a-values) on labels. The closed forms for the
//! minimal dual a-value live here as well; the brute-force route over
//! [`enumerate_cuspidal`] is the cross-check for them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{carrier_size, Family, GroupSpec, Scheme};
use crate::partition::Partition;
use crate::symbol;

/// A unipotent class of a classical group, named by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassLabel {
    group: GroupSpec,
    partition: Partition,
}

impl ClassLabel {
    pub fn new(group: GroupSpec, partition: Partition) -> Result<Self> {
        if partition.size() != group.carrier_size() {
            return Err(Error::InvalidLabel(format!(
                "{partition} has size {} but {group} needs {}",
                partition.size(),
                group.carrier_size()
            )));
        }
        Ok(Self { group, partition })
    }

    pub fn parse(group: &str, partition: &str) -> Result<Self> {
        Self::new(group.parse()?, partition.parse()?)
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn family(&self) -> Family {
        self.group.family()
    }

    pub fn rank(&self) -> u32 {
        self.group.rank()
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.group, self.partition.to_compact())
    }
}

/// Family criterion on a label of the right size.
fn satisfies_cuspidal_criterion(group: GroupSpec, p: &Partition) -> bool {
    let m = group.rank();
    let at_most_twice = || p.multiplicities().values().all(|&r| r <= 2);
    match group.family() {
        Family::A => p.parts() == [m + 1],
        Family::TwistedA => p.has_distinct_parts(),
        Family::B | Family::TwistedD => p.parts().iter().all(|&x| x % 2 == 1) && at_most_twice(),
        Family::C => p.parts().iter().all(|&x| x % 2 == 0) && at_most_twice(),
        Family::D => {
            p.parts().iter().all(|&x| x % 2 == 1) && at_most_twice() && p.parts() != [m, m]
        }
    }
}

pub fn is_cuspidal(c: &ClassLabel) -> bool {
    satisfies_cuspidal_criterion(c.group, &c.partition)
}

/// All cuspidal labels of `g`, in reverse lexicographic order (a linear
/// extension of dominance, largest class first).
pub fn enumerate_cuspidal(g: GroupSpec) -> Vec<ClassLabel> {
    Partition::all(g.carrier_size())
        .into_iter()
        .filter(|p| satisfies_cuspidal_criterion(g, p))
        .map(|partition| ClassLabel { group: g, partition })
        .collect()
}

/// The cuspidal class lying in the closure of every other cuspidal class.
pub fn minimal_cuspidal(g: GroupSpec) -> Result<ClassLabel> {
    let all = enumerate_cuspidal(g);
    if all.is_empty() {
        return Err(Error::NoCuspidalClass(g.to_string()));
    }
    let minima: Vec<&ClassLabel> = all
        .iter()
        .filter(|c| all.iter().all(|o| o.partition.dominates(&c.partition).unwrap_or(false)))
        .collect();
    match minima.as_slice() {
        [only] => Ok((*only).clone()),
        other => Err(Error::MinimalityViolated(g.to_string(), other.len())),
    }
}

/// `dim C_G(u)` for `u` of Jordan type `mu` in the adjoint group of the
/// given family and rank.
pub fn centralizer_dim(family: Family, m: u32, mu: &Partition) -> Result<u64> {
    let expected = carrier_size(family, m);
    if mu.size() != expected {
        return Err(Error::InvalidLabel(format!(
            "{mu} has size {} but {family}{m} needs {expected}",
            mu.size()
        )));
    }
    let squares = mu.conjugate_square_sum();
    let odd = u64::from(mu.odd_part_count());
    match family {
        Family::A | Family::TwistedA => Ok(squares - 1),
        Family::C => halve(squares + odd, mu),
        Family::B | Family::D | Family::TwistedD => {
            let twice = squares.checked_sub(odd).ok_or_else(|| Error::NonIntegralHalf(mu.to_string()))?;
            halve(twice, mu)
        }
    }
}

fn halve(twice: u64, mu: &Partition) -> Result<u64> {
    if twice % 2 == 1 {
        return Err(Error::NonIntegralHalf(mu.to_string()));
    }
    Ok(twice / 2)
}

/// Springer-fibre dimension `(dim C_G(u) - m) / 2` at `u` of type `mu`.
pub fn a_value(family: Family, m: u32, mu: &Partition) -> Result<u64> {
    let dim = centralizer_dim(family, m, mu)?;
    let twice = dim.checked_sub(u64::from(m)).ok_or_else(|| Error::NonIntegralHalf(mu.to_string()))?;
    halve(twice, mu)
}

/// Spaltenstein dual by conjugation, valid for special labels of
/// types A, 2A, B and C.
pub fn dual_class(c: &ClassLabel) -> Result<ClassLabel> {
    if c.family().is_orthogonal_even() {
        return Err(Error::UseSymbolRoute(c.family().to_string()));
    }
    Ok(ClassLabel { group: c.group, partition: c.partition.conjugate() })
}

/// `a_{d(C)}` for a cuspidal class: conjugation for A/2A/B/C, the
/// symbol route for D/2D.
pub fn dual_a_value(c: &ClassLabel) -> Result<u64> {
    if c.family().is_orthogonal_even() {
        symbol::a_dual_via_symbol(c)
    } else {
        let d = dual_class(c)?;
        a_value(d.family(), d.rank(), d.partition())
    }
}

/// Closed-form minimal dual a-value over the cuspidal classes of `g`.
pub fn a_min_closed_form(g: GroupSpec) -> u64 {
    let m = i64::from(g.rank());
    let Some(dec) = g.rank_decompose() else {
        return (m * (m + 1) / 2) as u64;
    };
    let (s, d) = (i64::from(dec.s), i64::from(dec.d));
    let value = match (g.family(), dec.scheme) {
        (_, Scheme::TwistedA) => {
            // both products are even, so the halves are exact
            s * (s * s - 1) / 6 + d * (2 * s + 1 - d) / 2
        }
        (Family::B, Scheme::BC) => {
            let base = s * (s + 1) * (4 * s - 1) / 6;
            base + if d <= s { d * (2 * s + 1 - d) } else { d * (4 * s + 2 - d) - s * (2 * s + 1) }
        }
        (_, Scheme::BC) => {
            let base = s * (s + 1) * (4 * s - 1) / 6;
            base + if d <= s + 1 {
                d * (2 * s + 2 - d)
            } else {
                d * (4 * s + 3 - d) - (s + 1) * (2 * s + 1)
            }
        }
        (_, Scheme::D) => {
            let base = s * (s - 1) * (4 * s + 1) / 6;
            base + if d <= s { d * (2 * s + 1 - d) } else { d * (4 * s - d) - s * (2 * s - 1) }
        }
    };
    debug_assert!(value >= 0);
    value as u64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExceptionalType {
    G2,
    F4,
    E6,
    #[serde(rename = "2E6")]
    TwistedE6,
    E7,
    E8,
}

impl ExceptionalType {
    pub const ALL: [ExceptionalType; 6] = [
        ExceptionalType::G2,
        ExceptionalType::F4,
        ExceptionalType::E6,
        ExceptionalType::TwistedE6,
        ExceptionalType::E7,
        ExceptionalType::E8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExceptionalType::G2 => "G_2",
            ExceptionalType::F4 => "F_4",
            ExceptionalType::E6 => "E_6",
            ExceptionalType::TwistedE6 => "2E_6",
            ExceptionalType::E7 => "E_7",
            ExceptionalType::E8 => "E_8",
        }
    }
}

impl FromStr for ExceptionalType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().replace('_', "").to_ascii_uppercase().as_str() {
            "G2" => Ok(ExceptionalType::G2),
            "F4" => Ok(ExceptionalType::F4),
            "E6" => Ok(ExceptionalType::E6),
            "2E6" => Ok(ExceptionalType::TwistedE6),
            "E7" => Ok(ExceptionalType::E7),
            "E8" => Ok(ExceptionalType::E8),
            _ => Err(Error::UnknownExceptional(s.to_string())),
        }
    }
}

/// Minimal cuspidal class of an exceptional type with its dual a-value and
/// the a-values of cuspidal unipotent characters of its 1-split Levi
/// subgroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExceptionalMinimum {
    pub class: &'static str,
    pub a_min: u32,
    pub possible_levi_a: &'static [u32],
}

pub fn a_min_exceptional(t: ExceptionalType) -> ExceptionalMinimum {
    let (class, a_min, possible_levi_a): (&str, u32, &[u32]) = match t {
        ExceptionalType::G2 => ("G_2(a_1)", 1, &[0, 1]),
        ExceptionalType::F4 => ("F_4(a_3)", 4, &[0, 1, 4]),
        ExceptionalType::E6 | ExceptionalType::TwistedE6 => ("D_4(a_1)", 7, &[0, 3, 4, 7]),
        ExceptionalType::E7 => ("A_4+A_1", 11, &[0, 3, 7, 11]),
        ExceptionalType::E8 => ("E_8(a_7)", 16, &[0, 3, 7, 11, 16]),
    };
    ExceptionalMinimum { class, a_min, possible_levi_a }
}
