mod common;

use std::collections::BTreeSet;

use hcseries_core::dectable::{evaluate_template, Assignment};
use hcseries_core::hc_bound::{Factor, LeviType};
use hcseries_core::symbol::upper_a_value_of_entries;
use hcseries_core::{
    enumerate_cuspidal, enumerate_levi_types, induce_same_family, minimal_cuspidal, springer_symbol, template,
    upper_a_value, ClassLabel, DecKind, Family, GroupSpec, Partition,
};
use proptest::prelude::*;

use common::{eval_entry, moves, normalize_tex_entry, p, parse_tex_table, tex_fixture, walk};

fn g(family: Family, rank: u32) -> GroupSpec {
    GroupSpec::new(family, rank).unwrap()
}

fn partition_strategy(max: u32) -> impl Strategy<Value = Partition> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(1..=n, 1..=n as usize)).prop_map(Partition::from_unsorted)
}

fn same_size_pair(max: u32) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        let len = all.len();
        (0..len, 0..len).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(x in partition_strategy(20)) {
        prop_assert_eq!(x.conjugate().conjugate(), x.clone());
        prop_assert_eq!(x.conjugate().size(), x.size());
        prop_assert_eq!(x.conjugate().len() as u32, x.largest_part());
    }

    #[test]
    fn conjugation_reverses_dominance((x, y) in same_size_pair(18)) {
        prop_assert_eq!(x.dominates(&y).unwrap(), y.conjugate().dominates(&x.conjugate()).unwrap());
    }

    #[test]
    fn symbol_a_value_ignores_entry_order(rank in 4u32..=12, seed in any::<u64>()) {
        let classes = enumerate_cuspidal(g(Family::D, rank));
        let c = &classes[(seed as usize) % classes.len()];
        let sym = springer_symbol(c).unwrap();
        let mut entries = sym.interleaved();
        let mut s = seed;
        for i in (1..entries.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            entries.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(upper_a_value_of_entries(&entries, rank), upper_a_value(&sym));
    }

    #[test]
    fn induction_is_transitive(family_ix in 0usize..6, rank in 1u32..=8, s1 in 0u32..=3, s2 in 0u32..=3) {
        let family = Family::ALL[family_ix];
        prop_assume!(rank >= family.min_rank());
        let step = if family == Family::TwistedA { 2 } else { 1 };
        let (mid, top) = (rank + s1 * step, rank + (s1 + s2) * step);
        for c in enumerate_cuspidal(g(family, rank)) {
            let direct = induce_same_family(&c, top).unwrap();
            let staged = induce_same_family(&induce_same_family(&c, mid).unwrap(), top).unwrap();
            prop_assert_eq!(direct, staged);
        }
    }

    #[test]
    fn templates_stay_unitriangular(kind_ix in 0usize..3, flag in 0usize..=5, k in 0u32..60) {
        let kind = DecKind::ALL[kind_ix];
        let mut flags = [0u8; 5];
        if flag < 5 {
            flags[flag] = 1;
        }
        let m = evaluate_template(kind, Assignment { flags, k });
        prop_assert!(m.is_lower_unitriangular());
    }
}

#[test]
fn partition_order_axioms_small() {
    for n in 0..=9 {
        let all = Partition::all(n);
        for x in &all {
            assert!(x.dominates(x).unwrap());
            for y in &all {
                if x.dominates(y).unwrap() && y.dominates(x).unwrap() {
                    assert_eq!(x, y);
                }
            }
        }
    }
    assert!(p("3,1").dominates(&p("2,1")).is_err());
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=12).map(|n| Partition::all(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
}

#[test]
fn minimal_class_is_dominated_by_all() {
    for family in Family::ALL {
        for rank in family.min_rank()..=12 {
            let grp = g(family, rank);
            let m = minimal_cuspidal(grp).unwrap();
            for c in enumerate_cuspidal(grp) {
                assert!(c.partition().dominates(m.partition()).unwrap(), "{c} vs {m}");
            }
        }
    }
}

#[test]
fn rewriting_moves_do_something() {
    let w = walk(Family::C, &Partition::single_row(12), |_| true);
    assert!(w.visited.len() > 1);
    assert!(!moves(Family::TwistedA, &p("7")).is_empty());
    assert!(moves(Family::TwistedA, &p("3,2,1")).is_empty());
    assert_eq!(moves(Family::TwistedA, &p("5,2")), [p("4,2,1"), p("4,3")]);
    assert_eq!(moves(Family::C, &p("8")), [p("6,2")]);
}

#[test]
fn levi_types_closed_under_dropping_a_factor() {
    for (family, lo) in [(Family::B, 2u32), (Family::C, 2), (Family::D, 4), (Family::TwistedD, 2)] {
        for rank in lo..=9 {
            let types: BTreeSet<LeviType> = enumerate_levi_types(g(family, rank)).unwrap().into_iter().collect();
            for t in &types {
                let factors = t.factors();
                for skip in 0..factors.len() {
                    let rest: Vec<Factor> =
                        factors.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, f)| *f).collect();
                    let classical = rest.iter().find(|f| !f.is_type_a()).copied();
                    let a_ranks = rest.iter().filter(|f| f.is_type_a()).map(|f| f.rank).collect();
                    let smaller = LeviType::new(classical, a_ranks);
                    assert!(types.contains(&smaller), "{family}{rank}: {t} without factor {skip} = {smaller}");
                }
            }
        }
    }
}

#[test]
fn factor_a_min_bounds_rank() {
    for family in [Family::A, Family::B, Family::C, Family::D, Family::TwistedD] {
        let lo = if family == Family::A { 1 } else { 2 };
        for rank in lo..=20 {
            let f = Factor { family, rank };
            assert!(2 * f.a_min() >= u64::from(rank), "{f}: a_min {}", f.a_min());
        }
    }
}

#[test]
fn fixtures_match_template_text() {
    for kind in DecKind::ALL {
        let tex = parse_tex_table(tex_fixture(kind));
        let t = template(kind);
        assert_eq!(tex.rows.len(), t.size());
        for (trow, row) in tex.rows.iter().zip(&t.rows) {
            assert_eq!(trow.label, row.label);
            assert_eq!(trow.a_value, row.a_value);
            let stored: Vec<Option<String>> = row.entries.iter().map(|e| e.as_ref().map(|x| x.to_string())).collect();
            assert_eq!(trow.entries, stored, "{kind} row {}", row.label);
        }
    }
}

#[test]
fn fixture_entries_evaluate_like_templates() {
    for kind in DecKind::ALL {
        let tex = parse_tex_table(tex_fixture(kind));
        for k in 0..=6u32 {
            for flag in 0..=5usize {
                let mut flags = [0u8; 5];
                if flag < 5 {
                    flags[flag] = 1;
                }
                let vals = |c: char| match c {
                    'a'..='e' => i64::from(flags[(c as u8 - b'a') as usize]),
                    'k' => i64::from(k),
                    other => panic!("unexpected symbol {other}"),
                };
                let m = evaluate_template(kind, Assignment { flags, k });
                for (i, trow) in tex.rows.iter().enumerate() {
                    for (j, e) in trow.entries.iter().enumerate() {
                        let want = e.as_deref().map_or(0, |e| eval_entry(e, &vals));
                        assert_eq!(m.rows[i].entries[j], want, "{kind} k={k} flags={flags:?} ({i},{j})");
                    }
                }
            }
        }
    }
}

#[test]
fn tex_normalizer() {
    assert_eq!(normalize_tex_entry("b {\\!+\\!} k").as_deref(), Some("b+k"));
    assert_eq!(normalize_tex_entry(" . "), None);
    assert_eq!(normalize_tex_entry("k(c{\\!+\\!} e{\\!+\\!} k\\mn1)").as_deref(), Some("k(c+e+k-1)"));
    assert_eq!(normalize_tex_entry("ke{\\!+\\!}\\binom{k}{2}").as_deref(), Some("ke+binom(k,2)"));
    assert_eq!(common::normalize_tex_label("\\binom{0,1,2}{1,n}"), "(0,1,2|1,n)");
}

#[test]
fn class_labels_reject_wrong_sizes() {
    assert!(ClassLabel::parse("B3", "3,3").is_err());
    assert!(ClassLabel::parse("C3", "4,2").is_ok());
}
