mod common;

use berge_core::search::{branch_and_bound_ex, brute_force_ex, ex_table, format_table, SearchOptions};
use berge_core::{is_bc4_free, lower_bound_construction, upper_bound};
use common::{naive_has_bc4, naive_max_free};

const GOLDEN: &str = include_str!("golden/ex_table_n6.tsv");

fn opts(threads: usize) -> SearchOptions {
    SearchOptions { node_budget: 10_000_000, threads }
}

#[test]
fn small_values_match_the_naive_oracle() {
    let expected = [1, 3, 3, 4];
    for (n, &want) in (3..=6).zip(&expected) {
        assert_eq!(naive_max_free(n), want, "oracle n = {n}");
        let bf = brute_force_ex(n).unwrap();
        let bb = branch_and_bound_ex(n, opts(1)).unwrap();
        assert_eq!(bf.max_edges, want);
        assert_eq!(bb.max_edges, want);
        assert!(bf.optimal && bb.optimal);
        assert_eq!(bf.witness, bb.witness, "both return the least maximizer");
        assert!(!naive_has_bc4(&bb.witness));
    }
}

#[test]
fn golden_table() {
    let rows = ex_table(6, SearchOptions::default()).unwrap();
    assert_eq!(format_table(&rows), GOLDEN);
}

#[test]
fn thread_count_does_not_change_the_outcome() {
    for n in [7, 8] {
        let base = branch_and_bound_ex(n, opts(1)).unwrap();
        for threads in [2, 8] {
            assert!(base.same_outcome(&branch_and_bound_ex(n, opts(threads)).unwrap()), "n = {n}, {threads} threads");
        }
    }
    // budget-limited runs too
    let cut = SearchOptions { node_budget: 500, threads: 1 };
    let a = branch_and_bound_ex(8, cut).unwrap();
    let b = branch_and_bound_ex(8, SearchOptions { threads: 8, ..cut }).unwrap();
    assert!(a.same_outcome(&b));
    assert!(!a.optimal);
}

#[test]
fn values_are_monotone_and_below_the_bound() {
    let mut prev = 0;
    for n in 3..=8 {
        let r = branch_and_bound_ex(n, opts(4)).unwrap();
        assert!(r.optimal);
        assert!(r.max_edges >= prev);
        assert!(is_bc4_free(&r.witness));
        assert!(upper_bound(n as u64).unwrap().admits(r.max_edges as u64));
        prev = r.max_edges;
    }
}

#[test]
fn zero_budget_is_not_optimal() {
    let r = branch_and_bound_ex(7, SearchOptions { node_budget: 0, threads: 1 }).unwrap();
    assert!(!r.optimal);
    assert!(is_bc4_free(&r.witness));
}

#[test]
fn constructions_sit_between_the_bounds() {
    for q in [2, 3, 4, 5] {
        let h = lower_bound_construction(q).unwrap();
        let n = h.vertex_count() as u64;
        assert!(upper_bound(n).unwrap().admits(h.edge_count() as u64));
    }
}

#[test]
fn bad_arguments() {
    assert!(brute_force_ex(7).is_err());
    assert!(brute_force_ex(2).is_err());
    assert!(branch_and_bound_ex(2, opts(1)).is_err());
    assert!(ex_table(2, opts(1)).is_err());
}
