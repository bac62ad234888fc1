//! Test oracles, kept independent of the library's search paths.
#![allow(dead_code)]

use berge_core::{Hypergraph, ShadowGraph, Vertex};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Berge C4 by brute force: every ordered 4-tuple of distinct vertices and
/// every injective choice of 4 edges covering its consecutive pairs.
pub fn naive_has_bc4(h: &Hypergraph) -> bool {
    let n = h.vertex_count() as Vertex;
    let edges: Vec<[Vertex; 3]> = h.edges().iter().map(|t| t.vertices()).collect();
    let covers = |e: usize, x: Vertex, y: Vertex| edges[e].contains(&x) && edges[e].contains(&y);
    let m = edges.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
                        continue;
                    }
                    for e0 in (0..m).filter(|&e| covers(e, a, b)) {
                        for e1 in (0..m).filter(|&e| e != e0 && covers(e, b, c)) {
                            for e2 in (0..m).filter(|&e| e != e0 && e != e1 && covers(e, c, d)) {
                                if (0..m).any(|e| e != e0 && e != e1 && e != e2 && covers(e, d, a)) {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Counts unordered 3-vertex paths by trying every (end, middle, end) triple.
pub fn brute_3paths(g: &ShadowGraph) -> u64 {
    let n = g.vertex_count() as Vertex;
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            for u in 0..n {
                if u != x && u != y && g.is_adjacent(x, u) && g.is_adjacent(u, y) {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Uniformly random set of `m` distinct triples (fewer if `m` exceeds C(n,3)).
pub fn random_hypergraph(n: usize, m: usize, seed: u64) -> Hypergraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = n * (n - 1) * (n - 2) / 6;
    let m = m.min(total);
    let mut edges: Vec<[Vertex; 3]> = Vec::new();
    while edges.len() < m {
        let mut t = [0; 3];
        for v in &mut t {
            *v = rng.gen_range(0..n as Vertex);
        }
        t.sort_unstable();
        if t[0] != t[1] && t[1] != t[2] && !edges.contains(&t) {
            edges.push(t);
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn binom2(x: BigRational) -> BigRational {
    x.clone() * (x - rat(1)) / rat(2)
}

/// The final counting inequality evaluated literally with fractional
/// binomials.
pub fn final_inequality_holds(n: u64, e: u64) -> bool {
    let (n, e) = (rat(n as i64), rat(e as i64));
    let lhs = n.clone() * binom2(rat(4) * e.clone() / n.clone()) + rat(4) * n.clone() * binom2(e.clone() / n.clone());
    let rhs = rat(2) * binom2(n) + rat(21) * e;
    lhs <= rhs
}

/// Largest integer edge count satisfying the final inequality, by binary
/// search (the admissible set is an interval starting at 0).
pub fn largest_admissible(n: u64) -> u64 {
    let (mut lo, mut hi) = (0u64, n * n);
    assert!(final_inequality_holds(n, lo) && !final_inequality_holds(n, hi));
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if final_inequality_holds(n, mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Largest Berge-C4-free edge count on `n` vertices, by depth-first search
/// over triple subsets with the naive detector deciding each extension.
pub fn naive_max_free(n: usize) -> usize {
    fn go(n: usize, triples: &[[Vertex; 3]], next: usize, chosen: &mut Vec<[Vertex; 3]>, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for i in next..triples.len() {
            chosen.push(triples[i]);
            if !naive_has_bc4(&Hypergraph::new(n, chosen.iter().copied()).unwrap()) {
                go(n, triples, i + 1, chosen, best);
            }
            chosen.pop();
        }
    }
    let n32 = n as Vertex;
    let triples: Vec<[Vertex; 3]> =
        (0..n32).flat_map(|a| (a + 1..n32).flat_map(move |b| (b + 1..n32).map(move |c| [a, b, c]))).collect();
    let mut best = 0;
    go(n, &triples, 0, &mut Vec::new(), &mut best);
    best
}
