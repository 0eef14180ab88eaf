//! The crate's tables and enumerators checked against brute-force oracles.

mod common;

use std::collections::BTreeSet;

use common::*;
use nilchain::ideal::enumerate_ideals;
use nilchain::{Budget, ChainComplex, ComplexKind, Ideal, IdealTable, RootSet, RootSystem};

const SMALL: &[(&str, usize)] = &[
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("C", 3),
    ("C", 4),
    ("D", 4),
    ("F", 4),
    ("G", 2),
];

const EVERYTHING: &[(&str, usize)] = &[
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("A", 4),
    ("A", 5),
    ("A", 7),
    ("A", 10),
    ("B", 2),
    ("B", 3),
    ("B", 4),
    ("B", 6),
    ("C", 3),
    ("C", 4),
    ("C", 6),
    ("D", 4),
    ("D", 5),
    ("D", 6),
    ("E", 6),
    ("E", 7),
    ("E", 8),
    ("F", 4),
    ("G", 2),
];

#[test]
fn roots_match_weyl_orbits() {
    for &(f, n) in EVERYTHING {
        let rs = system(f, n);
        let ours: BTreeSet<Vec<i32>> = vectors(&rs).into_iter().collect();
        assert_eq!(ours.len(), rs.len(), "{f}{n}: duplicate roots");
        assert_eq!(ours, weyl_orbit_positive_roots(rs.spec()), "{f}{n}");
        assert_eq!(rs.len(), rs.spec().positive_root_count(), "{f}{n}");
    }
}

#[test]
fn highest_roots_are_the_textbook_ones() {
    let cases: &[(&str, usize, &[i32])] = &[
        ("A", 3, &[1, 1, 1]),
        ("B", 4, &[1, 2, 2, 2]),
        ("C", 4, &[2, 2, 2, 1]),
        ("D", 5, &[1, 2, 2, 1, 1]),
        ("E", 6, &[1, 2, 2, 3, 2, 1]),
        ("E", 7, &[2, 2, 3, 4, 3, 2, 1]),
        ("E", 8, &[2, 3, 4, 6, 5, 4, 3, 2]),
        ("F", 4, &[2, 3, 4, 2]),
        ("G", 2, &[3, 2]),
    ];
    for &(f, n, top) in cases {
        assert_eq!(system(f, n).highest_root().coeffs(), top, "{f}{n}");
    }
}

#[test]
fn addition_table_matches_vector_sums() {
    for &(f, n) in SMALL {
        let rs = system(f, n);
        let v = vectors(&rs);
        for a in 0..v.len() {
            for b in 0..v.len() {
                let s: Vec<i32> = v[a].iter().zip(&v[b]).map(|(x, y)| x + y).collect();
                let expected = v.iter().position(|r| *r == s);
                assert_eq!(rs.add_roots(a, b).unwrap(), expected, "{f}{n}: {a}+{b}");
            }
        }
    }
}

#[test]
fn canonical_order_is_by_height() {
    for &(f, n) in EVERYTHING {
        let rs = system(f, n);
        let heights: Vec<i32> = rs.roots().iter().map(|r| r.height()).collect();
        assert!(heights.windows(2).all(|w| w[0] <= w[1]), "{f}{n}");
        for i in 0..n {
            assert_eq!(rs.roots()[i].coeffs(), nilchain::Root::simple(n, i).coeffs());
        }
    }
}

fn ideal_bits(rs: &RootSystem) -> BTreeSet<u128> {
    enumerate_ideals(rs).iter().map(|i| i.roots().bits()).collect()
}

#[test]
fn ideals_match_subset_scan() {
    for &(f, n) in &[("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("G", 2)] {
        let rs = system(f, n);
        assert_eq!(ideal_bits(&rs), ideals_by_subset_scan(&rs), "{f}{n}");
    }
}

#[test]
fn ideals_match_deletion_search() {
    for &(f, n) in &[
        ("A", 4),
        ("A", 5),
        ("B", 4),
        ("C", 4),
        ("D", 4),
        ("D", 5),
        ("F", 4),
        ("E", 6),
    ] {
        let rs = system(f, n);
        assert_eq!(ideal_bits(&rs), ideals_by_deletion_search(&rs), "{f}{n}");
    }
}

#[test]
fn ideal_counts_match_product_formulas() {
    for &(f, n) in EVERYTHING {
        let rs = system(f, n);
        assert_eq!(enumerate_ideals(&rs).len() as u64, catalan_count(rs.spec()), "{f}{n}");
    }
}

#[test]
fn fixed_ideal_counts() {
    let expected = [
        (("A", 2), 5),
        (("A", 3), 14),
        (("A", 4), 42),
        (("B", 2), 6),
        (("B", 3), 20),
        (("G", 2), 8),
        (("D", 4), 50),
        (("F", 4), 105),
        (("E", 6), 833),
    ];
    for ((f, n), count) in expected {
        let rs = system(f, n);
        assert_eq!(ideals_by_deletion_search(&rs).len(), count, "{f}{n}");
        assert_eq!(enumerate_ideals(&rs).len(), count, "{f}{n}");
    }
}

#[test]
fn closure_under_simple_roots_equals_closure_under_all_roots() {
    for &(f, n) in &[("A", 3), ("B", 3), ("C", 3), ("G", 2)] {
        let rs = system(f, n);
        for s in 0u128..1 << rs.len() {
            assert_eq!(
                closed_under_simple_roots(&rs, s),
                closed_under_all_roots(&rs, s),
                "{f}{n}: {s:b}"
            );
        }
    }
}

#[test]
fn ideal_predicates_match_oracles() {
    for &(f, n) in SMALL {
        let rs = system(f, n);
        let table = IdealTable::new(&rs);
        let mut abelian = 0;
        for (k, ideal) in table.ideals().iter().enumerate() {
            let bits = ideal.roots().bits();
            assert_eq!(table.is_abelian(k), is_abelian_oracle(&rs, bits), "{f}{n}: {ideal}");
            assert_eq!(ideal.derived(&rs).roots().bits(), derived_oracle(&rs, bits));
            let j = normalizer_oracle(&rs, bits);
            assert_eq!(table.normalizer_type(k).mask(), j, "{f}{n}: {ideal}");
            assert_eq!(ideal.normalizer_type(&rs).mask(), j);
            assert_eq!(
                table.is_radical(k),
                nilradical_oracle(&rs, j) == bits,
                "{f}{n}: {ideal}"
            );
            abelian += usize::from(table.is_abelian(k));
        }
        assert_eq!(abelian, 1 << n, "{f}{n}");
    }
}

#[test]
fn nilradicals_match_oracle() {
    for &(f, n) in SMALL {
        let rs = system(f, n);
        for j in nilchain::ParabolicType::all(n) {
            let ours = j.nilradical(&rs);
            assert_eq!(ours.roots().bits(), nilradical_oracle(&rs, j.mask()), "{f}{n} {j}");
            assert_eq!(ours.normalizer_type(&rs), j, "{f}{n} {j}");
        }
    }
}

#[test]
fn chain_tallies_match_subset_scan() {
    for &(f, n) in &[("A", 1), ("A", 2), ("A", 3), ("B", 2), ("G", 2), ("B", 3), ("C", 3)] {
        let rs = system(f, n);
        for kind in ComplexKind::ALL {
            if kind == ComplexKind::CI && f != "A" && n == 3 {
                continue; // see the rank-three test below
            }
            let brute = brute_force_chains(&rs, kind);
            let ours = ChainComplex::new(&rs, kind).tally(&Budget::unlimited(), false).unwrap();
            assert_eq!(ours.total(), brute.total, "{f}{n} {kind:?}");
            assert_eq!(ours.by_length(), &brute.by_length[..], "{f}{n} {kind:?}");
            let sum: std::collections::BTreeMap<u16, i64> =
                ours.sum_vector().iter().map(|(j, c)| (j.mask(), c)).collect();
            assert_eq!(sum, brute.sum, "{f}{n} {kind:?}");
        }
    }
}

#[test]
fn chain_tallies_of_rank_three_ci_match_subset_scan() {
    for &(f, n) in &[("B", 3), ("C", 3)] {
        let rs = system(f, n);
        let brute = brute_force_chains(&rs, ComplexKind::CI);
        let ours = ChainComplex::new(&rs, ComplexKind::CI)
            .tally(&Budget::unlimited(), true)
            .unwrap();
        assert_eq!(ours.total(), brute.total, "{f}{n}");
        assert_eq!(brute.total, 6304);
        assert_eq!(ours.by_length(), &brute.by_length[..]);
    }
}

#[test]
fn a2_chain_counts() {
    let rs = system("A", 2);
    let counts: Vec<u64> = ComplexKind::ALL
        .iter()
        .map(|&k| {
            ChainComplex::new(&rs, k)
                .tally(&Budget::unlimited(), false)
                .unwrap()
                .total()
        })
        .collect();
    assert_eq!(counts, [12, 6, 6, 6]);
}

#[test]
fn enumerated_chains_are_strict_and_distinct() {
    let rs = system("A", 3);
    let chains = ChainComplex::new(&rs, ComplexKind::CI).collect_chains().unwrap();
    assert_eq!(chains.len(), 408);
    let distinct: BTreeSet<Vec<Vec<usize>>> = chains.iter().map(|c| c.to_index_lists()).collect();
    assert_eq!(distinct.len(), 408);
    for c in &chains {
        for w in c.members().windows(2) {
            assert!(w[0].is_proper_subset(&w[1]));
            assert!(!w[0].is_zero());
        }
    }
}

#[test]
fn ideal_sum_is_union() {
    let rs = system("B", 3);
    let ideals = enumerate_ideals(&rs);
    for a in &ideals {
        for b in &ideals {
            let s = a.sum(b).unwrap();
            assert_eq!(s.roots(), a.roots().union(b.roots()));
            assert!(Ideal::new(&rs, s.roots()).is_ok());
        }
    }
    assert_eq!(RootSet::EMPTY.len(), 0);
}
