mod common;

use std::collections::HashSet;

use common::{center_key, naive_gamma, prufer_classes, prufer_edges, subdivision_edges};
use toid::enumerate::enumerate_free_trees;
use toid::graph::{subdivide, Tree};
use toid::solver::{bounds, gamma_brute, gamma_tree_dp, gamma_tree_dp_forced};

fn figure_one() -> Vec<(usize, usize)> {
    vec![(1, 0), (1, 2), (1, 3), (3, 4), (4, 5), (4, 6)]
}

#[test]
fn naive_oracle_on_known_values() {
    let e = figure_one();
    assert_eq!(naive_gamma(7, &e, &[]), 3);
    assert_eq!(naive_gamma(13, &subdivision_edges(7, &e), &[]), 8);
    assert_eq!(naive_gamma(13, &subdivision_edges(7, &e), &[1, 3, 4]), 8);

    // S(P_n) = P_{2n-1}
    let paths: Vec<usize> = (2..=9)
        .map(|n| {
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            naive_gamma(2 * n - 1, &subdivision_edges(n, &e), &[])
        })
        .collect();
    assert_eq!(paths, vec![2, 3, 4, 6, 7, 8, 10, 11]);

    let claw = [(0, 1), (0, 2), (0, 3)];
    assert_eq!(naive_gamma(7, &subdivision_edges(4, &claw), &[]), 4);
}

#[test]
fn library_solvers_match_the_naive_oracle() {
    for n in 2..=8 {
        for t in enumerate_free_trees(n).unwrap() {
            let e = t.edges();
            let s = subdivide(&t).unwrap();
            let want_t = naive_gamma(n, &e, &[]);
            let want_s = naive_gamma(2 * n - 1, &subdivision_edges(n, &e), &[]);
            assert_eq!(gamma_tree_dp(&t).unwrap().value, want_t);
            assert_eq!(gamma_brute(&t, &[]).unwrap().value, want_t);
            assert_eq!(gamma_tree_dp(&s.graph).unwrap().value, want_s);
            assert_eq!(bounds(&t).unwrap().gamma, want_s);
        }
    }
}

#[test]
fn forced_dp_matches_the_naive_oracle() {
    let e = figure_one();
    let t = Tree::from_edges(7, e.clone()).unwrap();
    for forced in [vec![0], vec![0, 2], vec![5, 6], vec![3]] {
        assert_eq!(gamma_tree_dp_forced(&t, &forced).unwrap().value, naive_gamma(7, &e, &forced));
    }
}

#[test]
fn prufer_decoder_agrees_with_the_library() {
    for seq in [vec![3, 3, 3, 4], vec![0, 0], vec![5, 1, 1, 4, 4]] {
        let ours = prufer_edges(&seq);
        let theirs = Tree::from_prufer(&seq).unwrap();
        let n = seq.len() + 2;
        assert_eq!(center_key(n, &ours), center_key(n, &theirs.edges()));
    }
}

#[test]
fn enumeration_matches_prufer_dedupe() {
    for n in 1..=8 {
        let ours: HashSet<String> = enumerate_free_trees(n).unwrap().map(|t| center_key(n, &t.edges())).collect();
        assert_eq!(ours, prufer_classes(n), "n = {n}");
    }
}
