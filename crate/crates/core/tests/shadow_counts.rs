mod common;

use berge_core::construct::all_triples;
use berge_core::{count_3paths, degrees, shadow, Hypergraph, ShadowGraph, Vertex};
use common::{brute_3paths, random_hypergraph};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_pairs(n: usize) -> Vec<(Vertex, Vertex)> {
    let n = n as Vertex;
    (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect()
}

#[test]
fn path_identity_on_every_graph_up_to_six_vertices() {
    for n in 0..=6 {
        let pairs = all_pairs(n);
        for mask in 0u32..(1 << pairs.len()) {
            let chosen = pairs.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, p)| *p);
            let g = ShadowGraph::from_pairs(n, chosen).unwrap();
            assert_eq!(count_3paths(&g), brute_3paths(&g));
        }
    }
}

#[test]
fn path_identity_on_random_graphs_with_seven_and_eight_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in 7..=8 {
        let pairs = all_pairs(n);
        for _ in 0..2000 {
            let p: f64 = rng.gen();
            let chosen: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
            let g = ShadowGraph::from_pairs(n, chosen).unwrap();
            assert_eq!(count_3paths(&g), brute_3paths(&g));
        }
    }
}

#[test]
fn path_identity_on_random_shadows() {
    for seed in 0..200 {
        let h = random_hypergraph(5 + (seed % 10) as usize, 1 + (seed % 25) as usize, seed);
        let g = shadow(&h);
        assert_eq!(count_3paths(&g), brute_3paths(&g));
    }
}

fn hypergraph_strategy() -> impl Strategy<Value = Hypergraph> {
    (3usize..10).prop_flat_map(|n| {
        let triples = all_triples(n);
        proptest::sample::subsequence(triples.clone(), 0..=triples.len().min(25))
            .prop_map(move |edges| Hypergraph::from_triples(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn degree_sums(h in hypergraph_strategy()) {
        let p = degrees(&h);
        let g = shadow(&h);
        prop_assert_eq!(p.total_degree(), 3 * h.edge_count());
        prop_assert_eq!(p.total_shadow_degree(), 2 * g.edge_count());
        for r in p.iter() {
            prop_assert_eq!(r.excess_degree, r.shadow_degree as i64 - r.degree as i64);
            if r.degree >= 1 {
                prop_assert!(r.shadow_degree <= 2 * r.degree);
                prop_assert!(r.degree <= r.shadow_degree * (r.shadow_degree - 1) / 2);
            }
        }
    }

    #[test]
    fn shadow_pairs_are_exactly_covered_pairs(h in hypergraph_strategy()) {
        let g = shadow(&h);
        for (x, y) in all_pairs(h.vertex_count()) {
            let covered = h.edges().iter().any(|t| t.contains_pair(x, y));
            prop_assert_eq!(g.is_adjacent(x, y), covered);
            prop_assert_eq!(g.is_adjacent(y, x), covered);
        }
    }

    #[test]
    fn text_round_trip(h in hypergraph_strategy()) {
        let back = Hypergraph::parse(&h.to_string()).unwrap();
        prop_assert_eq!(&back, &h);
        prop_assert_eq!(shadow(&back), shadow(&h));
    }
}
