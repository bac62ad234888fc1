//! Berge-C4-free constructions.
//!
//! The lower-bound family starts from the point/line incidence graph of the
//! projective plane PG(2, q), which has girth 6, and turns every incidence
//! `(p, L)` into the hyperedge `{p, L, L'}` where `L'` is a fresh clone of the
//! line `L`. The random generator greedily adds shuffled triples while the
//! hypergraph stays Berge-C4-free.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::berge::{is_bc4_free, Bc4Tracker};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hypergraph::{Hypergraph, Triple, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Bipartite graph with classes `[0, left_count)` and `[0, right_count)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl BipartiteGraph {
    pub fn new(left_count: usize, right_count: usize, mut edges: Vec<(Vertex, Vertex)>) -> Result<BipartiteGraph> {
        if let Some(&(l, r)) = edges.iter().find(|&&(l, r)| l as usize >= left_count || r as usize >= right_count) {
            return Err(Error::InvalidArgument(format!("edge ({l}, {r}) out of range")));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!("duplicate edge {:?}", w[0])));
        }
        Ok(BipartiteGraph { left_count, right_count, edges })
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// No two left vertices have two common right neighbors.
    pub fn is_c4_free(&self) -> bool {
        let mut nbrs = vec![Vec::new(); self.left_count];
        for &(l, r) in &self.edges {
            nbrs[l as usize].push(r);
        }
        let mut mark = vec![usize::MAX; self.right_count];
        for a in 0..self.left_count {
            for &r in &nbrs[a] {
                mark[r as usize] = a;
            }
            if nbrs[a + 1..].iter().any(|nb| nb.iter().filter(|&&r| mark[r as usize] == a).count() >= 2) {
                return false;
            }
        }
        true
    }
}

/// Points of PG(2, q): nonzero vectors whose first nonzero coordinate is 1.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut pts = vec![[0, 0, 1]];
    pts.extend((0..q).map(|a| [0, 1, a]));
    pts.extend((0..q).flat_map(|a| (0..q).map(move |b| [1, a, b])));
    pts
}

/// Point/line incidence graph of PG(2, q); points on the left, lines on the
/// right. `q` must be a prime or one of 4, 8, 9, 16.
pub fn projective_plane_incidence(q: u64) -> Result<BipartiteGraph> {
    let field = Field::new(q)?;
    let pts = projective_points(field.order());
    let dot = |x: &[usize; 3], y: &[usize; 3]| (0..3).fold(0, |acc, i| field.add(acc, field.mul(x[i], y[i])));
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if dot(p, l) == 0 {
                edges.push((i as Vertex, j as Vertex));
            }
        }
    }
    BipartiteGraph::new(pts.len(), pts.len(), edges)
}

/// Clones every vertex `v` of `cloned` into `v'` and maps each graph edge
/// `uv` (with `v` on the cloned side) to the hyperedge `{u, v, v'}`.
///
/// Vertex ids: left class first, then the right class, then the clones in
/// the order of the cloned class.
pub fn expand_to_hypergraph(g: &BipartiteGraph, cloned: Side) -> Hypergraph {
    let (l, r) = (g.left_count as Vertex, g.right_count as Vertex);
    let extra = match cloned {
        Side::Left => g.left_count,
        Side::Right => g.right_count,
    };
    let edges = g.edges.iter().map(|&(u, v)| {
        let clone = match cloned {
            Side::Left => l + r + u,
            Side::Right => l + r + v,
        };
        [u, l + v, clone]
    });
    Hypergraph::new(g.left_count + g.right_count + extra, edges).expect("clones are fresh vertices")
}

/// The Berge-C4-free hypergraph on `3(q^2 + q + 1)` vertices with
/// `(q + 1)(q^2 + q + 1)` edges.
pub fn lower_bound_construction(q: u64) -> Result<Hypergraph> {
    let g = projective_plane_incidence(q)?;
    let h = expand_to_hypergraph(&g, Side::Right);
    if q <= 16 {
        assert!(g.is_c4_free(), "incidence graph of PG(2, {q}) has a 4-cycle");
        assert!(is_bc4_free(&h), "construction for q = {q} has a Berge C4");
    }
    Ok(h)
}

/// Greedy random Berge-C4-free hypergraph.
///
/// All `C(n, 3)` triples are listed in lexicographic order and shuffled with
/// ChaCha8 seeded by `seed` (Fisher-Yates from `rand`); each triple is kept
/// when the hypergraph stays Berge-C4-free. Stops after `target_m` edges or
/// when the triples run out.
pub fn random_bc4free(n: usize, target_m: usize, seed: u64) -> Result<Hypergraph> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("random generator needs n >= 3, got {n}")));
    }
    let mut triples = all_triples(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    triples.shuffle(&mut rng);

    let mut tracker = Bc4Tracker::new(n);
    for t in triples {
        if tracker.len() >= target_m {
            break;
        }
        if tracker.admits(t) {
            tracker.push(t);
        }
    }
    Ok(tracker.to_hypergraph())
}

/// All triples of `[0, n)` in lexicographic order.
pub fn all_triples(n: usize) -> Vec<Triple> {
    let n = n as Vertex;
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push(Triple::new(a, b, c).unwrap());
            }
        }
    }
    out
}
