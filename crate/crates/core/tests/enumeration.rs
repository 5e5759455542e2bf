mod common;

use std::collections::BTreeSet;

use mtd::enumerate::{enumerate_free_trees, enumerate_rooted_trees, MAX_ENUMERATION_N};
use mtd::tree::partition_at_gravity_root;

#[test]
fn rooted_enumeration_matches_brute_force() {
    for n in 1..=7 {
        let ours: Vec<String> = enumerate_rooted_trees(n)
            .unwrap()
            .map(|rt| common::ahu_code(rt.tree(), rt.root()))
            .collect();
        let unique: BTreeSet<String> = ours.iter().cloned().collect();
        assert_eq!(unique.len(), ours.len(), "duplicates at n={n}");
        assert_eq!(unique, common::rooted_classes(n), "n={n}");
    }
}

#[test]
fn free_enumeration_matches_brute_force() {
    for n in 1..=7 {
        let ours: Vec<String> = enumerate_free_trees(n)
            .unwrap()
            .map(|t| common::free_code(&t))
            .collect();
        let unique: BTreeSet<String> = ours.iter().cloned().collect();
        assert_eq!(unique.len(), ours.len(), "duplicates at n={n}");
        assert_eq!(unique, common::free_classes(n), "n={n}");
    }
}

#[test]
fn class_counts() {
    let rooted = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719, 1842, 4766];
    let free = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    for n in 1..=12 {
        assert_eq!(
            enumerate_rooted_trees(n).unwrap().count(),
            rooted[n - 1],
            "rooted n={n}"
        );
        assert_eq!(
            enumerate_free_trees(n).unwrap().count(),
            free[n - 1],
            "free n={n}"
        );
    }
    assert!(enumerate_rooted_trees(0).is_err());
    assert!(enumerate_free_trees(MAX_ENUMERATION_N + 1).is_err());
}

#[test]
fn partition_bound_exhaustive() {
    for n in 3..=12 {
        for tree in enumerate_free_trees(n).unwrap() {
            let p = partition_at_gravity_root(&tree).unwrap();
            let big = p.t1_vertices.len();
            assert!(big >= p.t2_vertices.len());
            assert!(big <= (2 * n + 1) / 3, "n={n}: |T1|={big}");
            let mut all: Vec<usize> = p
                .t1_vertices
                .iter()
                .chain(&p.t2_vertices)
                .copied()
                .collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), n);
        }
    }
}
