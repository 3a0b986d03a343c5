//! Cyclotomic conditions `ℓ | Φ_e(q)` and the indicator `κ`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `e` such that the condition reads `ℓ | Φ_e(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EllTag {
    E1,
    E2,
    E3,
    E4,
    E5,
    E6,
    E8,
    E10,
}

impl EllTag {
    pub const ALL: [EllTag; 8] =
        [EllTag::E1, EllTag::E2, EllTag::E3, EllTag::E4, EllTag::E5, EllTag::E6, EllTag::E8, EllTag::E10];

    pub fn order(self) -> u32 {
        match self {
            EllTag::E1 => 1,
            EllTag::E2 => 2,
            EllTag::E3 => 3,
            EllTag::E4 => 4,
            EllTag::E5 => 5,
            EllTag::E6 => 6,
            EllTag::E8 => 8,
            EllTag::E10 => 10,
        }
    }

    /// `Φ_e(q)` as printed, with carets for powers.
    pub fn polynomial(self) -> &'static str {
        match self {
            EllTag::E1 => "q-1",
            EllTag::E2 => "q+1",
            EllTag::E3 => "q^2+q+1",
            EllTag::E4 => "q^2+1",
            EllTag::E5 => "q^4+q^3+q^2+q+1",
            EllTag::E6 => "q^2-q+1",
            EllTag::E8 => "q^4+1",
            EllTag::E10 => "q^4-q^3+q^2-q+1",
        }
    }

    pub fn condition(self) -> String {
        format!("ℓ|({})", self.polynomial())
    }

    /// Signed coefficients of `Φ_e`, constant term first.
    fn coefficients(self) -> &'static [i128] {
        match self {
            EllTag::E1 => &[-1, 1],
            EllTag::E2 => &[1, 1],
            EllTag::E3 => &[1, 1, 1],
            EllTag::E4 => &[1, 0, 1],
            EllTag::E5 => &[1, 1, 1, 1, 1],
            EllTag::E6 => &[1, -1, 1],
            EllTag::E8 => &[1, 0, 0, 0, 1],
            EllTag::E10 => &[1, -1, 1, -1, 1],
        }
    }

    /// `Φ_e(q) mod ℓ`.
    pub fn eval_mod(self, q: u64, ell: u64) -> u64 {
        let m = i128::from(ell);
        let q = i128::from(q) % m;
        let mut acc = 0i128;
        for &c in self.coefficients().iter().rev() {
            acc = (acc * q + c).rem_euclid(m);
        }
        acc as u64
    }
}

impl fmt::Display for EllTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.order())
    }
}

impl FromStr for EllTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        EllTag::ALL
            .into_iter()
            .find(|tag| tag.to_string() == t)
            .ok_or_else(|| Error::Parse(format!("unknown condition tag {s:?}")))
    }
}

/// The set of cyclotomic conditions satisfied by `ℓ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EllClass {
    active: BTreeSet<EllTag>,
    source: Option<(u64, u64)>,
}

impl EllClass {
    /// No condition active.
    pub fn none() -> Self {
        Self::default()
    }

    pub fn single(tag: EllTag) -> Self {
        Self { active: BTreeSet::from([tag]), source: None }
    }

    pub fn from_tags(tags: impl IntoIterator<Item = EllTag>) -> Self {
        Self { active: tags.into_iter().collect(), source: None }
    }

    pub fn active(&self) -> &BTreeSet<EllTag> {
        &self.active
    }

    pub fn is_active(&self, tag: EllTag) -> bool {
        self.active.contains(&tag)
    }

    /// The `(q, ℓ)` pair this class was computed from, if any.
    pub fn source(&self) -> Option<(u64, u64)> {
        self.source
    }
}

impl fmt::Display for EllClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<String> = self.active.iter().map(EllTag::to_string).collect();
        write!(f, "{{{}}}", tags.join(","))
    }
}

impl FromStr for EllClass {
    type Err = Error;

    /// Accepts `e4`, `e2,e4`, `{e3}`, `{}` and `none`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}').trim();
        if inner.is_empty() || inner.eq_ignore_ascii_case("none") {
            return Ok(Self::none());
        }
        let tags = inner.split(',').map(str::parse).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_tags(tags))
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_power_base(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

/// `q^e mod m` with 128-bit intermediates.
pub fn modpow(q: u64, mut e: u64, m: u64) -> u64 {
    let m128 = u128::from(m);
    let mut base = u128::from(q) % m128;
    let mut acc = 1u128 % m128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m128;
        }
        base = base * base % m128;
        e >>= 1;
    }
    acc as u64
}

/// `κ_{ℓ, q^e + c}`: 1 if `ℓ` divides `q^e + c`, else 0.
pub fn kappa(ell: u64, q: u64, e: u64, c: i64) -> u8 {
    let m = i128::from(ell);
    let r = (i128::from(modpow(q, e, ell)) + i128::from(c)).rem_euclid(m);
    u8::from(r == 0)
}

/// Conditions satisfied by a prime `ℓ > 5` for an odd prime power `q`.
pub fn ell_class_from(q: u64, ell: u64) -> Result<EllClass> {
    if q < 3 || q.is_multiple_of(2) || prime_power_base(q).is_none() {
        return Err(Error::Precondition(format!("q = {q} is not an odd prime power ≥ 3")));
    }
    if !is_prime(ell) {
        return Err(Error::Precondition(format!("ℓ = {ell} is not prime")));
    }
    if ell <= 5 {
        return Err(Error::Precondition(format!("ℓ ≤ 5 (ℓ = {ell})")));
    }
    if q.is_multiple_of(ell) {
        return Err(Error::Precondition(format!("ℓ divides q ({ell} | {q})")));
    }
    if (q + 1).is_multiple_of(ell) {
        return Err(Error::Precondition(format!("ℓ divides q+1 ({ell} | {})", q + 1)));
    }
    let active: BTreeSet<EllTag> =
        EllTag::ALL.into_iter().filter(|t| t.eval_mod(q, ell) == 0).collect();
    if active.len() > 1 {
        return Err(Error::Precondition(format!(
            "ℓ = {ell} satisfies several conditions at q = {q}: {active:?}"
        )));
    }
    Ok(EllClass { active, source: Some((q, ell)) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors() {
        assert_eq!(ell_class_from(3, 13).unwrap().active(), &BTreeSet::from([EllTag::E3]));
        assert_eq!(ell_class_from(3, 41).unwrap().active(), &BTreeSet::from([EllTag::E8]));
        assert_eq!(ell_class_from(3, 7).unwrap().active(), &BTreeSet::from([EllTag::E6]));
        assert!(ell_class_from(3, 11).unwrap().active().contains(&EllTag::E5));
        assert!(ell_class_from(5, 17).unwrap().active().is_empty());
    }

    #[test]
    fn preconditions() {
        let msg = ell_class_from(3, 2).unwrap_err().to_string();
        assert!(msg.contains("ℓ ≤ 5"), "{msg}");
        assert!(ell_class_from(13, 7).unwrap_err().to_string().contains("q+1"));
        assert!(ell_class_from(4, 7).is_err());
        assert!(ell_class_from(15, 7).is_err());
        assert!(ell_class_from(7, 7).is_err());
        assert!(ell_class_from(3, 9).is_err());
        assert!(ell_class_from(9, 7).is_ok());
    }

    #[test]
    fn eval_matches_direct_values() {
        for q in [3u64, 5, 7, 9] {
            let direct = [
                q - 1,
                q + 1,
                q * q + q + 1,
                q * q + 1,
                q.pow(4) + q.pow(3) + q * q + q + 1,
                q * q - q + 1,
                q.pow(4) + 1,
                q.pow(4) - q.pow(3) + q * q - q + 1,
            ];
            for (tag, value) in EllTag::ALL.into_iter().zip(direct) {
                for ell in [7u64, 11, 13, 31, 41, 61] {
                    assert_eq!(tag.eval_mod(q, ell), value % ell, "{tag} q={q} ell={ell}");
                }
            }
        }
    }

    #[test]
    fn kappa_examples() {
        assert_eq!(kappa(7, 3, 3, 1), 1);
        assert_eq!(kappa(7, 3, 4, -1), 0);
        assert_eq!(kappa(13, 3, 3, -1), 1);
    }

    #[test]
    fn parse_classes() {
        assert_eq!("e4".parse::<EllClass>().unwrap(), EllClass::single(EllTag::E4));
        assert_eq!("{}".parse::<EllClass>().unwrap(), EllClass::none());
        assert_eq!("none".parse::<EllClass>().unwrap(), EllClass::none());
        assert_eq!("{e2,e4}".parse::<EllClass>().unwrap().active().len(), 2);
        assert!("e7".parse::<EllClass>().is_err());
        assert_eq!(EllClass::single(EllTag::E10).to_string(), "{e10}");
    }
}
