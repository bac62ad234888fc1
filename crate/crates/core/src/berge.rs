//! Berge paths and cycles.
//!
//! A Berge cycle of length `l` is a cyclic sequence of `l` distinct vertices
//! together with `l` distinct hyperedges, the `i`-th containing the `i`-th
//! consecutive pair. Detection enumerates cycles (or paths) of the 2-shadow in
//! a canonical order and asks, per candidate, for a system of distinct
//! representatives between its consecutive pairs and the hyperedges covering
//! them.

use std::fmt;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{pair, shadow, Hypergraph, PairIndex, ShadowGraph, Triple, Vertex};
use crate::matching::distinct_representatives;

/// A Berge cycle: `edges[i]` contains `vertices[i]` and `vertices[i + 1]`
/// (indices mod the length). Edge entries index into the hypergraph's
/// canonical edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergeCycle {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
}

/// A Berge path: `edges[i]` contains `vertices[i]` and `vertices[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BergePath {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<usize>,
}

impl fmt::Display for BergeCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {:?} via edges {:?}", self.vertices, self.edges)
    }
}

fn check_indices(h: &Hypergraph, vertices: &[Vertex], edges: &[usize]) -> Result<()> {
    if let Some(v) = vertices.iter().find(|&&v| v as usize >= h.vertex_count()) {
        return Err(Error::InvalidWitness(format!("vertex {v} out of range")));
    }
    if let Some(e) = edges.iter().find(|&&e| e >= h.edge_count()) {
        return Err(Error::InvalidWitness(format!("edge index {e} out of range")));
    }
    Ok(())
}

fn all_distinct<T: Ord + Copy>(items: &[T]) -> bool {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Checks a cycle witness against `h`. Out-of-range indices are an error;
/// any other violation yields `Ok(false)`.
pub fn verify_cycle_witness(h: &Hypergraph, w: &BergeCycle) -> Result<bool> {
    check_indices(h, &w.vertices, &w.edges)?;
    let len = w.vertices.len();
    if len < 2 || w.edges.len() != len {
        return Ok(false);
    }
    if !all_distinct(&w.vertices) || !all_distinct(&w.edges) {
        return Ok(false);
    }
    Ok((0..len).all(|i| h.edge(w.edges[i]).contains_pair(w.vertices[i], w.vertices[(i + 1) % len])))
}

/// Path counterpart of [`verify_cycle_witness`].
pub fn verify_path_witness(h: &Hypergraph, w: &BergePath) -> Result<bool> {
    check_indices(h, &w.vertices, &w.edges)?;
    let len = w.edges.len();
    if len < 1 || w.vertices.len() != len + 1 {
        return Ok(false);
    }
    if !all_distinct(&w.vertices) || !all_distinct(&w.edges) {
        return Ok(false);
    }
    Ok((0..len).all(|i| h.edge(w.edges[i]).contains_pair(w.vertices[i], w.vertices[i + 1])))
}

struct Walker<'a> {
    g: &'a ShadowGraph,
    index: &'a PairIndex,
    target: usize,
    cyclic: bool,
    path: Vec<Vertex>,
    used: Vec<bool>,
}

impl Walker<'_> {
    fn representatives(&self) -> Option<Vec<usize>> {
        let p = &self.path;
        let k = p.len();
        let steps = if self.cyclic { k } else { k - 1 };
        let options: Vec<&[usize]> = (0..steps).map(|i| self.index.edges_with(p[i], p[(i + 1) % k])).collect();
        distinct_representatives(&options)
    }

    /// Extends the current prefix in ascending neighbor order; returns the
    /// first complete sequence admitting distinct representatives.
    fn extend(&mut self) -> Option<Vec<usize>> {
        let start = self.path[0];
        let last = *self.path.last().unwrap();
        if self.path.len() == self.target {
            if self.cyclic {
                let closes = self.g.is_adjacent(last, start);
                let reflected_ok = self.target < 3 || self.path[1] < last;
                if !(closes && reflected_ok) {
                    return None;
                }
            } else if start >= last {
                return None;
            }
            return self.representatives();
        }
        for &next in self.g.neighbors(last) {
            if self.used[next as usize] || (self.cyclic && next < start) {
                continue;
            }
            self.path.push(next);
            self.used[next as usize] = true;
            let found = self.extend();
            self.used[next as usize] = false;
            if found.is_some() {
                return found;
            }
            self.path.pop();
        }
        None
    }
}

fn search(h: &Hypergraph, vertices: usize, cyclic: bool) -> Option<(Vec<Vertex>, Vec<usize>)> {
    let g = shadow(h);
    let index = h.pair_index();
    let mut walker = Walker {
        g: &g,
        index: &index,
        target: vertices,
        cyclic,
        path: Vec::with_capacity(vertices),
        used: vec![false; h.vertex_count()],
    };
    for start in 0..h.vertex_count() as Vertex {
        walker.path.clear();
        walker.path.push(start);
        walker.used[start as usize] = true;
        let found = walker.extend();
        walker.used[start as usize] = false;
        if let Some(edges) = found {
            return Some((walker.path, edges));
        }
    }
    None
}

/// Finds a Berge cycle of length `len`, returning the first one in canonical
/// order: cycles are vertex sequences starting at their smallest vertex with
/// the second vertex smaller than the last, compared lexicographically.
pub fn find_berge_cycle(h: &Hypergraph, len: usize) -> Result<Option<BergeCycle>> {
    if len < 2 {
        return Err(Error::InvalidArgument(format!("cycle length must be at least 2, got {len}")));
    }
    if h.edge_count() < len || h.vertex_count() < len {
        return Ok(None);
    }
    Ok(search(h, len, true).map(|(vertices, edges)| BergeCycle { vertices, edges }))
}

/// Finds a Berge path with `len` edges; canonical order is lexicographic over
/// vertex sequences whose first vertex is smaller than the last.
pub fn find_berge_path(h: &Hypergraph, len: usize) -> Result<Option<BergePath>> {
    if len < 1 {
        return Err(Error::InvalidArgument(format!("path length must be at least 1, got {len}")));
    }
    if h.edge_count() < len || h.vertex_count() < len + 1 {
        return Ok(None);
    }
    Ok(search(h, len + 1, false).map(|(vertices, edges)| BergePath { vertices, edges }))
}

/// True iff `h` has no Berge cycle of length four.
pub fn is_bc4_free(h: &Hypergraph) -> bool {
    find_berge_cycle(h, 4).expect("length 4 is valid").is_none()
}

/// Incremental Berge-C4 tracking for edge-by-edge construction.
///
/// Adding an edge to a Berge-C4-free hypergraph creates a Berge C4 only if
/// the new edge is one of the cycle's edges, so [`Bc4Tracker::admits`] only
/// looks at 4-cycles through a pair of the candidate.
#[derive(Debug, Clone)]
pub struct Bc4Tracker {
    n: usize,
    edges: Vec<Triple>,
    pairs: FxHashMap<(Vertex, Vertex), Vec<usize>>,
    neighbors: Vec<Vec<Vertex>>,
}

impl Bc4Tracker {
    pub fn new(n: usize) -> Bc4Tracker {
        Bc4Tracker { n, edges: Vec::new(), pairs: FxHashMap::default(), neighbors: vec![Vec::new(); n] }
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn covering(&self, x: Vertex, y: Vertex) -> &[usize] {
        self.pairs.get(&pair(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Whether adding `t` keeps the hypergraph Berge-C4-free. Assumes the
    /// current edge set is Berge-C4-free and does not contain `t`.
    pub fn admits(&self, t: Triple) -> bool {
        for (x, y) in t.pairs() {
            // cycle x, y, a, b with t covering {x, y}
            for &a in &self.neighbors[y as usize] {
                if a == x {
                    continue;
                }
                for &b in &self.neighbors[x as usize] {
                    if b == y || b == a {
                        continue;
                    }
                    let mid = self.covering(a, b);
                    if mid.is_empty() {
                        continue;
                    }
                    if distinct_representatives(&[self.covering(y, a), mid, self.covering(b, x)]).is_some() {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn push(&mut self, t: Triple) {
        let id = self.edges.len();
        self.edges.push(t);
        for (x, y) in t.pairs() {
            let list = self.pairs.entry((x, y)).or_default();
            if list.is_empty() {
                self.neighbors[x as usize].push(y);
                self.neighbors[y as usize].push(x);
            }
            list.push(id);
        }
    }

    pub fn pop(&mut self) -> Option<Triple> {
        let t = self.edges.pop()?;
        for (x, y) in t.pairs() {
            let list = self.pairs.get_mut(&(x, y)).expect("pair of a tracked edge");
            list.pop();
            if list.is_empty() {
                self.pairs.remove(&(x, y));
                let nx = &mut self.neighbors[x as usize];
                nx.swap_remove(nx.iter().position(|&v| v == y).unwrap());
                let ny = &mut self.neighbors[y as usize];
                ny.swap_remove(ny.iter().position(|&v| v == x).unwrap());
            }
        }
        Some(t)
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::from_triples(self.n, self.edges.clone()).expect("tracked edges are distinct")
    }
}
