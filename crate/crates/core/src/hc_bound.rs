//! Harish-Chandra series of small a-value.
//!
//! 1-split Levi subgroups are read off node subsets of the Dynkin diagram.
//! A cuspidal pair `(L, λ)` survives when
//!
//! * the minimal a-values of the factors of `L` add up to at most `a_max`,
//! * every factor carries a cuspidal Brauer character from the data table
//!   whose ℓ-condition holds, with total a-value at most `a_max`,
//! * some placement of `L` in the diagram escapes every exclusion rule.
//!
//! Cuspidal data and exclusion rules live in `data/hc_tables.toml`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::cuspidal::a_min_closed_form;
use crate::cyclotomic::{EllClass, EllTag};
use crate::error::{Error, Result};
use crate::group::{Family, GroupSpec};

/// Largest rank for which diagram subsets are enumerated.
pub const MAX_ENUMERATION_RANK: u32 = 20;

/// A simple factor of a Levi subgroup. Type-A factors use [`Family::A`];
/// `D_2` is kept as its own factor type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub family: Family,
    pub rank: u32,
}

impl Factor {
    pub fn a(rank: u32) -> Self {
        Self { family: Family::A, rank }
    }

    pub fn is_type_a(&self) -> bool {
        self.family == Family::A
    }

    /// Smallest dual a-value over the cuspidal classes of the factor.
    pub fn a_min(&self) -> u64 {
        let r = u64::from(self.rank);
        match (self.family, self.rank) {
            (Family::A, _) => r * (r + 1) / 2,
            // A_1 x A_1, one regular class in each
            (Family::D, 2) => 2,
            (Family::D, 3) => 6,
            (family, rank) => {
                let g = GroupSpec::new(family, rank).expect("Levi factors are valid groups");
                a_min_closed_form(g)
            }
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family.tag(), self.rank)
    }
}

impl FromStr for Factor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().replace('_', "");
        let split = if t.starts_with('2') { 2 } else { 1 };
        if t.len() <= split || !t.is_char_boundary(split) {
            return Err(Error::Parse(format!("bad factor {s:?}")));
        }
        let (fam, rank) = t.split_at(split);
        let family: Family = fam.parse()?;
        let rank: u32 = rank.parse().map_err(|_| Error::Parse(format!("bad factor rank in {s:?}")))?;
        if rank == 0 {
            return Err(Error::Parse(format!("bad factor rank in {s:?}")));
        }
        Ok(Self { family, rank })
    }
}

/// Semisimple type of a 1-split Levi subgroup: at most one factor of the
/// ambient classical type plus type-A factors, ranks in decreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LeviType {
    classical: Option<Factor>,
    a_ranks: Vec<u32>,
}

impl LeviType {
    pub fn torus() -> Self {
        Self::default()
    }

    pub fn new(classical: Option<Factor>, mut a_ranks: Vec<u32>) -> Self {
        a_ranks.sort_unstable_by(|x, y| y.cmp(x));
        Self { classical, a_ranks }
    }

    fn from_factors(factors: &[Factor]) -> Self {
        let classical = factors.iter().find(|f| !f.is_type_a()).copied();
        let a_ranks = factors.iter().filter(|f| f.is_type_a()).map(|f| f.rank).collect();
        Self::new(classical, a_ranks)
    }

    pub fn classical(&self) -> Option<Factor> {
        self.classical
    }

    pub fn a_ranks(&self) -> &[u32] {
        &self.a_ranks
    }

    /// Factors in canonical order: classical first, then type A by
    /// decreasing rank.
    pub fn factors(&self) -> Vec<Factor> {
        self.classical.into_iter().chain(self.a_ranks.iter().map(|&r| Factor::a(r))).collect()
    }

    pub fn semisimple_rank(&self) -> u32 {
        self.factors().iter().map(|f| f.rank).sum()
    }

    pub fn is_torus(&self) -> bool {
        self.classical.is_none() && self.a_ranks.is_empty()
    }
}

impl fmt::Display for LeviType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_torus() {
            return f.write_str("∅");
        }
        if let Some(c) = self.classical {
            write!(f, "{c}")?;
        }
        let mut i = 0;
        while i < self.a_ranks.len() {
            let r = self.a_ranks[i];
            let run = self.a_ranks[i..].iter().take_while(|&&x| x == r).count();
            write!(f, "A_{r}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

fn bit(i: usize) -> u32 {
    1 << i
}

fn lowest(mask: u32) -> usize {
    mask.trailing_zeros() as usize
}

/// Dynkin diagram of a classical group, nodes `0..n`.
///
/// Lines for A, B, C (the last node is the B/C end); for D and 2D the line
/// `0..n-2` carries the fork nodes `n-2` and `n-1` on node `n-3`.
#[derive(Debug, Clone)]
struct Diagram {
    family: Family,
    n: usize,
    adj: Vec<u32>,
}

/// A node subset split into classified factors.
type Placement = Vec<(Factor, u32)>;

impl Diagram {
    fn new(family: Family, n: usize) -> Self {
        let mut adj = vec![0u32; n];
        let edge = |i: usize, j: usize, adj: &mut Vec<u32>| {
            adj[i] |= bit(j);
            adj[j] |= bit(i);
        };
        if family.is_orthogonal_even() {
            for i in 0..n.saturating_sub(3) {
                edge(i, i + 1, &mut adj);
            }
            if n >= 3 {
                edge(n - 3, n - 2, &mut adj);
                edge(n - 3, n - 1, &mut adj);
            }
        } else {
            for i in 0..n.saturating_sub(1) {
                edge(i, i + 1, &mut adj);
            }
        }
        Self { family, n, adj }
    }

    fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            bit(self.n) - 1
        }
    }

    fn forks(&self) -> Option<u32> {
        self.family.is_orthogonal_even().then(|| bit(self.n - 2) | bit(self.n - 1))
    }

    fn neighbours(&self, mask: u32) -> u32 {
        (0..self.n).filter(|&i| mask & bit(i) != 0).fold(0, |acc, i| acc | self.adj[i])
    }

    /// Connected component of `start` inside `within`.
    fn component(&self, start: usize, within: u32) -> u32 {
        let mut comp = bit(start);
        loop {
            let grown = comp | (self.neighbours(comp) & within);
            if grown == comp {
                return comp;
            }
            comp = grown;
        }
    }

    fn classify_component(&self, comp: u32) -> Factor {
        let size = comp.count_ones();
        let end = bit(self.n - 1);
        match self.family {
            Family::B | Family::C if comp & end != 0 && size >= 2 => {
                Factor { family: self.family, rank: size }
            }
            _ => Factor::a(size),
        }
    }

    /// Factors of the Levi subgroup on `mask`; `None` for subsets of a 2D
    /// diagram that are not stable under the fork swap.
    fn classify(&self, mask: u32) -> Option<Placement> {
        let mut rest = mask;
        let mut out = Vec::new();
        if let Some(forks) = self.forks() {
            let present = mask & forks;
            if self.family == Family::TwistedD && present != 0 && present != forks {
                return None;
            }
            if present == forks {
                let mut comp = forks;
                if self.n >= 3 && mask & bit(self.n - 3) != 0 {
                    comp |= self.component(self.n - 3, mask & !forks);
                }
                let j = comp.count_ones();
                let factor = match (self.family, j) {
                    (Family::TwistedD, _) => Factor { family: Family::TwistedD, rank: j },
                    (_, 3) => Factor::a(3),
                    _ => Factor { family: Family::D, rank: j },
                };
                out.push((factor, comp));
                rest &= !comp;
            }
        }
        while rest != 0 {
            let comp = self.component(lowest(rest), rest);
            out.push((self.classify_component(comp), comp));
            rest &= !comp;
        }
        out.sort_by_key(|&(f, m)| (f.is_type_a(), std::cmp::Reverse(f.rank), m));
        Some(out)
    }

    /// Largest rank of a connected type-A node subset inside `allowed` that
    /// contains `targets`; 0 if there is none.
    fn max_a_window(&self, targets: u32, allowed: u32) -> u32 {
        if targets == 0 || targets & !allowed != 0 {
            return 0;
        }
        let start = lowest(targets);
        let k = self.component(start, allowed);
        if targets & !k != 0 {
            return 0;
        }
        let fits = |w: u32| if targets & !w == 0 { w.count_ones() } else { 0 };
        match self.family {
            Family::A | Family::TwistedA => k.count_ones(),
            Family::B | Family::C => {
                let end = bit(self.n - 1);
                if k & end == 0 {
                    k.count_ones()
                } else if targets & end != 0 {
                    // only the single end node is of type A
                    u32::from(targets == end)
                } else {
                    fits(self.component(start, k & !end))
                }
            }
            Family::D => {
                let forks = self.forks().expect("D has forks");
                if k & forks != forks {
                    return k.count_ones();
                }
                [bit(self.n - 2), bit(self.n - 1)]
                    .into_iter()
                    .filter(|&f| targets & f == 0)
                    .map(|f| fits(self.component(start, k & !f)))
                    .max()
                    .unwrap_or(0)
            }
            Family::TwistedD => {
                let forks = self.forks().expect("2D has forks");
                if targets & forks != 0 {
                    return 0;
                }
                fits(self.component(start, k & !forks))
            }
        }
    }
}

fn check_enumerable(g: GroupSpec) -> Result<Diagram> {
    if g.family() == Family::TwistedA {
        return Err(Error::Unsupported("Levi enumeration for 2A".into()));
    }
    if g.rank() > MAX_ENUMERATION_RANK {
        return Err(Error::EnumerationBound(g.rank()));
    }
    Ok(Diagram::new(g.family(), g.rank() as usize))
}

/// Placements grouped by type, over subsets of at most `max_nodes` nodes.
fn placements_by_type(d: &Diagram, max_nodes: u32) -> BTreeMap<LeviType, Vec<Placement>> {
    let mut out: BTreeMap<LeviType, Vec<Placement>> = BTreeMap::new();
    for mask in 0..=d.all() {
        if mask.count_ones() > max_nodes {
            continue;
        }
        if let Some(p) = d.classify(mask) {
            let factors: Vec<Factor> = p.iter().map(|&(f, _)| f).collect();
            out.entry(LeviType::from_factors(&factors)).or_default().push(p);
        }
    }
    out
}

/// All semisimple types of 1-split Levi subgroups of `g`, the torus and `g`
/// itself included.
pub fn enumerate_levi_types(g: GroupSpec) -> Result<Vec<LeviType>> {
    let d = check_enumerable(g)?;
    let types: BTreeSet<LeviType> = (0..=d.all())
        .filter_map(|mask| d.classify(mask))
        .map(|p| LeviType::from_factors(&p.iter().map(|&(f, _)| f).collect::<Vec<_>>()))
        .collect();
    Ok(types.into_iter().collect())
}

/// ℓ-condition of a cuspidal datum: satisfied when any listed tag is
/// active; an empty list means "always".
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Condition(Vec<EllTag>);

impl Condition {
    pub fn always() -> Self {
        Self(Vec::new())
    }

    pub fn any_of(tags: impl IntoIterator<Item = EllTag>) -> Self {
        let set: BTreeSet<EllTag> = tags.into_iter().collect();
        Self(set.into_iter().collect())
    }

    pub fn is_always(&self) -> bool {
        self.0.is_empty()
    }

    pub fn tags(&self) -> &[EllTag] {
        &self.0
    }

    pub fn holds(&self, ell: &EllClass) -> bool {
        self.is_always() || self.0.iter().any(|&t| ell.is_active(t))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_always() {
            return f.write_str("always");
        }
        f.write_str("ℓ|")?;
        for t in &self.0 {
            write!(f, "({})", t.polynomial())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CuspidalDatum {
    pub factor: Factor,
    pub label: String,
    pub a_value: u32,
    pub condition: Condition,
    pub source: String,
}

impl fmt::Display for CuspidalDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {} | {}", self.factor, self.label, self.a_value, self.condition)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum RuleScope {
    /// A type-A window of at least this rank around the targeted factors.
    Window(u32),
    /// Ambient group of this family and at least this rank.
    Ambient(Family, u32),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExclusionRule {
    pub targets: Vec<Factor>,
    pub label: String,
    pub condition: EllTag,
    pub scope: RuleScope,
    pub forced: u32,
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcTables {
    pub version: u32,
    pub cuspidal: Vec<CuspidalDatum>,
    pub rules: Vec<ExclusionRule>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTables {
    version: u32,
    cuspidal: Vec<RawDatum>,
    rule: Vec<RawRule>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCondition {
    Keyword(String),
    Tags(Vec<EllTag>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDatum {
    factor: String,
    label: String,
    a: u32,
    condition: RawCondition,
    source: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRule {
    targets: Vec<String>,
    label: String,
    condition: EllTag,
    window: Option<u32>,
    ambient: Option<(String, u32)>,
    forced: u32,
    source: String,
}

const HC_TABLES_TOML: &str = include_str!("../data/hc_tables.toml");

/// Parses a table file in the format of the bundled `hc_tables.toml`.
pub fn parse_hc_tables(text: &str) -> Result<HcTables> {
    let raw: RawTables = toml::from_str(text).map_err(|e| Error::Data(e.to_string()))?;
    if raw.version != 1 {
        return Err(Error::Data(format!("unsupported table version {}", raw.version)));
    }
    let cuspidal = raw
        .cuspidal
        .into_iter()
        .map(|d| {
            let condition = match d.condition {
                RawCondition::Keyword(k) if k == "always" => Condition::always(),
                RawCondition::Keyword(k) => return Err(Error::Data(format!("unknown condition {k:?}"))),
                RawCondition::Tags(tags) if tags.is_empty() => {
                    return Err(Error::Data(format!("empty condition for {}", d.label)))
                }
                RawCondition::Tags(tags) => Condition::any_of(tags),
            };
            Ok(CuspidalDatum { factor: d.factor.parse()?, label: d.label, a_value: d.a, condition, source: d.source })
        })
        .collect::<Result<Vec<_>>>()?;
    let rules = raw
        .rule
        .into_iter()
        .map(|r| {
            let scope = match (r.window, r.ambient) {
                (Some(w), None) => RuleScope::Window(w),
                (None, Some((family, rank))) => RuleScope::Ambient(family.parse()?, rank),
                _ => return Err(Error::Data(format!("rule {:?} needs exactly one of window/ambient", r.source))),
            };
            let targets = r.targets.iter().map(|t| t.parse()).collect::<Result<Vec<Factor>>>()?;
            if targets.is_empty() {
                return Err(Error::Data(format!("rule {:?} has no targets", r.source)));
            }
            Ok(ExclusionRule { targets, label: r.label, condition: r.condition, scope, forced: r.forced, source: r.source })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HcTables { version: raw.version, cuspidal, rules })
}

/// The bundled cuspidal data and exclusion rules.
pub fn hc_tables() -> &'static HcTables {
    static TABLES: OnceLock<HcTables> = OnceLock::new();
    TABLES.get_or_init(|| parse_hc_tables(HC_TABLES_TOML).expect("bundled hc_tables.toml is valid"))
}

/// Rows of the cuspidal Brauer character table whose condition holds.
pub fn cuspidal_brauer_data(ell: &EllClass) -> Vec<CuspidalDatum> {
    hc_tables().cuspidal.iter().filter(|d| d.condition.holds(ell)).cloned().collect()
}

/// A surviving Harish-Chandra series `(L, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcSeries {
    pub levi: LeviType,
    /// One datum per factor of `levi`, in [`LeviType::factors`] order.
    pub data: Vec<CuspidalDatum>,
    /// Active tags through which the data conditions hold; empty if all
    /// data are unconditional.
    pub conditions: Vec<EllTag>,
}

impl HcSeries {
    pub fn a_value(&self) -> u32 {
        self.data.iter().map(|d| d.a_value).sum()
    }

    /// `1` for the torus, else the data labels joined by `⊗`.
    pub fn lambda(&self) -> String {
        if self.data.is_empty() {
            "1".to_string()
        } else {
            self.data.iter().map(|d| d.label.as_str()).collect::<Vec<_>>().join("⊗")
        }
    }

    pub fn condition_text(&self) -> String {
        if self.conditions.is_empty() {
            "always".to_string()
        } else {
            self.conditions.iter().map(|t| t.condition()).collect::<Vec<_>>().join(", ")
        }
    }
}

impl fmt::Display for HcSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}) | {}", self.levi, self.lambda(), self.condition_text())
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

struct Query<'a> {
    g: GroupSpec,
    diagram: Diagram,
    ell: &'a EllClass,
    a_max: u32,
}

impl Query<'_> {
    fn rule_excludes(&self, rule: &ExclusionRule, placement: &Placement, data: &[&CuspidalDatum]) -> bool {
        let mut wanted = rule.targets.clone();
        wanted.sort();
        for choice in combinations(placement.len(), wanted.len()) {
            let mut got: Vec<Factor> = choice.iter().map(|&i| placement[i].0).collect();
            got.sort();
            if got != wanted || choice.iter().any(|&i| data[i].label != rule.label) {
                continue;
            }
            let applies = match rule.scope {
                RuleScope::Ambient(family, rank) => self.g.family() == family && self.g.rank() >= rank,
                RuleScope::Window(min_rank) => {
                    let targets = choice.iter().fold(0, |acc, &i| acc | placement[i].1);
                    let others = (0..placement.len())
                        .filter(|i| !choice.contains(i))
                        .fold(0, |acc, i| acc | placement[i].1);
                    let allowed = self.diagram.all() & !others & !self.diagram.neighbours(others);
                    self.diagram.max_a_window(targets, allowed) >= min_rank
                }
            };
            if !applies {
                continue;
            }
            let rest: u32 = (0..data.len()).filter(|i| !choice.contains(i)).map(|i| data[i].a_value).sum();
            if rule.forced + rest > self.a_max {
                return true;
            }
        }
        false
    }

    fn placement_excluded(&self, placement: &Placement, data: &[&CuspidalDatum]) -> bool {
        hc_tables()
            .rules
            .iter()
            .filter(|r| self.ell.is_active(r.condition))
            .any(|r| self.rule_excludes(r, placement, data))
    }
}

/// Cartesian product of per-factor candidate lists.
fn assignments<'a>(candidates: &[Vec<&'a CuspidalDatum>]) -> Vec<Vec<&'a CuspidalDatum>> {
    candidates.iter().fold(vec![Vec::new()], |acc, options| {
        acc.into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&d| {
                    let mut next = prefix.clone();
                    next.push(d);
                    next
                })
            })
            .collect()
    })
}

/// Harish-Chandra series of `g` that may contain unipotent Brauer characters
/// of a-value at most `a_max` for primes in the class `ell`.
///
/// Supported: `B_n` (n ≥ 2, a_max ≤ 4, ℓ ∤ q+1) and `D_n`, `2D_n` (n ≥ 4,
/// a_max ≤ 3).
pub fn hc_series_bound(g: GroupSpec, a_max: u32, ell: &EllClass) -> Result<Vec<HcSeries>> {
    match g.family() {
        Family::B => {
            if a_max > 4 {
                return Err(Error::Unsupported(format!("a_max = {a_max} for type B (at most 4)")));
            }
            if ell.is_active(EllTag::E2) {
                return Err(Error::Unsupported("type B with ℓ | q+1".into()));
            }
        }
        Family::D | Family::TwistedD => {
            if a_max > 3 {
                return Err(Error::Unsupported(format!("a_max = {a_max} for type {} (at most 3)", g.family())));
            }
            if g.rank() < 4 {
                return Err(Error::RankBelowThreshold(format!("{g}: need rank at least 4")));
            }
        }
        other => return Err(Error::Unsupported(format!("Harish-Chandra bound for type {other}"))),
    }
    let diagram = check_enumerable(g)?;
    let query = Query { g, diagram, ell, a_max };
    let available = cuspidal_brauer_data(ell);
    // every factor has a_min ≥ rank / 2, so larger subsets cannot pass
    let placements = placements_by_type(&query.diagram, 2 * a_max);

    let mut out = Vec::new();
    for (levi, places) in &placements {
        let factors = levi.factors();
        let a_min_sum: u64 = factors.iter().map(Factor::a_min).sum();
        if a_min_sum > u64::from(a_max) {
            continue;
        }
        let candidates: Vec<Vec<&CuspidalDatum>> =
            factors.iter().map(|f| available.iter().filter(|d| d.factor == *f).collect()).collect();
        let mut seen = BTreeSet::new();
        for data in assignments(&candidates) {
            let total: u32 = data.iter().map(|d| d.a_value).sum();
            if total > a_max {
                continue;
            }
            let key: Vec<&str> = data.iter().map(|d| d.label.as_str()).collect();
            if !seen.insert(key) {
                continue;
            }
            if places.iter().all(|p| query.placement_excluded(p, &data)) {
                continue;
            }
            debug_assert!(a_min_sum <= u64::from(a_max));
            let conditions: BTreeSet<EllTag> = data
                .iter()
                .flat_map(|d| d.condition.tags().iter().copied().filter(|&t| ell.is_active(t)))
                .collect();
            out.push(HcSeries {
                levi: levi.clone(),
                data: data.into_iter().cloned().collect(),
                conditions: conditions.into_iter().collect(),
            });
        }
    }
    out.sort_by(|x, y| {
        (x.a_value(), x.levi.semisimple_rank(), &x.levi, x.lambda()).cmp(&(
            y.a_value(),
            y.levi.semisimple_rank(),
            &y.levi,
            y.lambda(),
        ))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    fn names(types: &[LeviType]) -> Vec<String> {
        types.iter().map(LeviType::to_string).collect()
    }

    fn rows(group: &str, a_max: u32, ell: &str) -> Vec<String> {
        hc_series_bound(g(group), a_max, &ell.parse().unwrap())
            .unwrap()
            .iter()
            .map(|s| format!("({}, {})", s.levi, s.lambda()))
            .collect()
    }

    #[test]
    fn levi_type_display() {
        assert_eq!(LeviType::torus().to_string(), "∅");
        assert_eq!(LeviType::new(None, vec![1, 1]).to_string(), "A_1^2");
        let d2a1 = LeviType::new(Some(Factor { family: Family::D, rank: 2 }), vec![1]);
        assert_eq!(d2a1.to_string(), "D_2A_1");
        let b2a2 = LeviType::new(Some(Factor { family: Family::B, rank: 2 }), vec![2]);
        assert_eq!(b2a2.to_string(), "B_2A_2");
        assert_eq!(LeviType::new(None, vec![1, 2, 1]).to_string(), "A_2A_1^2");
    }

    #[test]
    fn factor_parse() {
        assert_eq!("2D_3".parse::<Factor>().unwrap(), Factor { family: Family::TwistedD, rank: 3 });
        assert_eq!("A1".parse::<Factor>().unwrap(), Factor::a(1));
        assert!("A_0".parse::<Factor>().is_err());
    }

    #[test]
    fn b2_levi_types() {
        assert_eq!(names(&enumerate_levi_types(g("B2")).unwrap()), ["∅", "A_1", "B_2"]);
    }

    #[test]
    fn d4_levi_types() {
        let types = names(&enumerate_levi_types(g("D4")).unwrap());
        for t in ["∅", "A_1", "A_1^2", "D_2", "D_2A_1", "A_2", "A_3", "D_4"] {
            assert!(types.contains(&t.to_string()), "{t} missing from {types:?}");
        }
        assert!(!types.contains(&"A_1^3".to_string()));
        assert!(!types.contains(&"D_3".to_string()));
    }

    #[test]
    fn twisted_d_levi_types() {
        let t4 = names(&enumerate_levi_types(g("2D4")).unwrap());
        assert_eq!(t4, ["∅", "A_1", "A_2", "2D_2", "2D_2A_1", "2D_3", "2D_4"]);
        let t5 = names(&enumerate_levi_types(g("2D5")).unwrap());
        assert!(t5.contains(&"A_1^2".to_string()));
    }

    #[test]
    fn enumeration_bound() {
        assert_eq!(enumerate_levi_types(g("B21")).unwrap_err(), Error::EnumerationBound(21));
        assert!(enumerate_levi_types(g("2A5")).is_err());
    }

    #[test]
    fn data_lookup() {
        let e4 = cuspidal_brauer_data(&"e4".parse().unwrap());
        let has = |rows: &[CuspidalDatum], f: &str, l: &str, a: u32| {
            rows.iter().any(|d| d.factor.to_string() == f && d.label == l && d.a_value == a)
        };
        assert!(has(&e4, "2D_2", "-.1", 2));
        assert!(has(&e4, "B_2", "-.1^2", 4));
        assert!(has(&e4, "B_2", "B_2", 1));
        let none = cuspidal_brauer_data(&EllClass::none());
        assert_eq!(none.len(), 2);
        assert!(has(&none, "B_2", "B_2", 1) && has(&none, "D_4", "D_4", 3));
        assert!(has(&cuspidal_brauer_data(&"e3".parse().unwrap()), "A_2", "1^3", 3));
    }

    #[test]
    fn d_series_examples() {
        assert_eq!(rows("D6", 3, "e2"), ["(∅, 1)", "(A_1, 1^2)", "(D_2, -.2)", "(D_4, D_4)"]);
        assert_eq!(
            rows("D4", 3, "e2"),
            ["(∅, 1)", "(A_1, 1^2)", "(A_1^2, 1^2⊗1^2)", "(D_2, -.2)", "(D_2A_1, -.2⊗1^2)", "(D_4, D_4)"]
        );
        assert!(rows("2D4", 3, "e3").contains(&"(A_2, 1^3)".to_string()));
        assert!(!rows("2D5", 3, "e3").contains(&"(A_2, 1^3)".to_string()));
    }

    #[test]
    fn b_series_examples() {
        assert_eq!(rows("B6", 4, "none"), ["(∅, 1)", "(B_2, B_2)"]);
        assert_eq!(rows("B5", 4, "e3"), ["(∅, 1)", "(B_2, B_2)", "(B_2A_2, B_2⊗1^3)"]);
        assert_eq!(rows("B3", 4, "e6"), ["(∅, 1)", "(B_2, B_2)", "(B_3, B_2:1^2)"]);
    }

    #[test]
    fn unsupported_queries() {
        assert!(hc_series_bound(g("B5"), 5, &EllClass::none()).is_err());
        assert!(hc_series_bound(g("D5"), 4, &EllClass::none()).is_err());
        assert!(hc_series_bound(g("B5"), 4, &"e2".parse().unwrap()).is_err());
        assert!(hc_series_bound(g("2D3"), 3, &EllClass::none()).is_err());
        assert!(hc_series_bound(g("C4"), 3, &EllClass::none()).is_err());
    }

    #[test]
    fn condition_rendering() {
        assert_eq!(Condition::any_of([EllTag::E4, EllTag::E2]).to_string(), "ℓ|(q+1)(q^2+1)");
        assert_eq!(Condition::always().to_string(), "always");
    }
}
