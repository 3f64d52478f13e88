mod common;

use std::collections::BTreeSet;

use common::lists;
use scstar::search::{canonical_form, enumerate_topologies, enumerate_up_to, up_to_homeomorphism, Method};

#[test]
fn brute_and_preorder_agree_up_to_four_points() {
    for n in 1..=4 {
        let brute = enumerate_topologies(n, Method::Brute).unwrap();
        let preorder = enumerate_topologies(n, Method::Preorder).unwrap();
        assert_eq!(brute, preorder, "n = {n}");
    }
}

#[test]
fn oracle_enumeration_agrees() {
    for n in 1..=4 {
        let ours: BTreeSet<Vec<Vec<usize>>> =
            enumerate_topologies(n, Method::Preorder).unwrap().iter().map(lists).collect();
        let theirs: BTreeSet<Vec<Vec<usize>>> =
            scstar_oracle::topologies(n).iter().map(|s| s.open_lists()).collect();
        assert_eq!(ours, theirs, "n = {n}");
    }
}

#[test]
fn labeled_counts_through_five_points() {
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_topologies(n, Method::Preorder).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 4, 29, 355, 6942]);
    assert_eq!(enumerate_up_to(4, Method::Preorder).unwrap().len(), 389);
}

#[test]
fn homeomorphism_classes_at_four_points() {
    let spaces = enumerate_topologies(4, Method::Preorder).unwrap();
    let classes = up_to_homeomorphism(&spaces);
    assert_eq!(classes.len(), 33);
    let forms: BTreeSet<_> = classes.iter().map(canonical_form).collect();
    assert_eq!(forms.len(), 33);
}
