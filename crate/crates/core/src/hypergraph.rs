//! 3-uniform hypergraphs, their 2-shadows and the shadow-level degrees.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};

/// Vertex id, dense in `[0, n)`.
pub type Vertex = u32;

/// A hyperedge: three distinct vertices, stored ascending.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Triple([Vertex; 3]);

impl Triple {
    /// Sorts the three vertices; `None` if any two coincide.
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Option<Triple> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == v[1] || v[1] == v[2] {
            None
        } else {
            Some(Triple(v))
        }
    }

    pub fn vertices(&self) -> [Vertex; 3] {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn contains_pair(&self, x: Vertex, y: Vertex) -> bool {
        self.contains(x) && self.contains(y)
    }

    /// The three 2-subsets, each as an ascending pair.
    pub fn pairs(&self) -> [(Vertex, Vertex); 3] {
        let [a, b, c] = self.0;
        [(a, b), (a, c), (b, c)]
    }

    /// The vertex of the triple other than `x` and `y`.
    pub fn third(&self, x: Vertex, y: Vertex) -> Option<Vertex> {
        if !self.contains_pair(x, y) || x == y {
            return None;
        }
        self.0.iter().copied().find(|&v| v != x && v != y)
    }

    pub fn shared(&self, other: &Triple) -> usize {
        self.0.iter().filter(|v| other.contains(**v)).count()
    }

    /// True when all three vertices lie in `set`.
    pub fn inside(&self, set: &[Vertex]) -> bool {
        self.0.iter().all(|v| set.contains(v))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// Ascending pair key.
pub(crate) fn pair(x: Vertex, y: Vertex) -> (Vertex, Vertex) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// A 3-uniform hypergraph on `[0, n)` with a canonically ordered edge set.
///
/// Edges are sorted lexicographically, so edge indices are stable for equal
/// hypergraphs and the text serialization is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Triple>,
}

impl Hypergraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Hypergraph>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut triples = Vec::new();
        for e in edges {
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { edge: e, vertex: v, n });
            }
            let t = Triple::new(e[0], e[1], e[2]).ok_or(Error::RepeatedVertex(e))?;
            triples.push(t);
        }
        Hypergraph::from_triples(n, triples)
    }

    pub fn from_triples(n: usize, mut edges: Vec<Triple>) -> Result<Hypergraph> {
        for t in &edges {
            if let Some(&v) = t.0.iter().find(|&&v| v as usize >= n) {
                return Err(Error::VertexOutOfRange { edge: t.0, vertex: v, n });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0));
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn empty(n: usize) -> Hypergraph {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Triple {
        self.edges[index]
    }

    pub fn index_of(&self, t: &Triple) -> Option<usize> {
        self.edges.binary_search(t).ok()
    }

    pub fn contains_edge(&self, t: &Triple) -> bool {
        self.index_of(t).is_some()
    }

    /// Copy with one more edge.
    pub fn with_edge(&self, t: Triple) -> Result<Hypergraph> {
        let mut edges = self.edges.clone();
        edges.push(t);
        Hypergraph::from_triples(self.n, edges)
    }

    /// Sub-hypergraph on the same vertex set keeping the given edge indices.
    pub fn restrict(&self, indices: &[usize]) -> Hypergraph {
        let mut edges: Vec<Triple> = indices.iter().map(|&i| self.edges[i]).collect();
        edges.sort_unstable();
        edges.dedup();
        Hypergraph { n: self.n, edges }
    }

    /// Hyperedge degree of every vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for t in &self.edges {
            for v in t.0 {
                deg[v as usize] += 1;
            }
        }
        deg
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.vertex_degrees().iter().enumerate().filter(|(_, &d)| d == 0).map(|(v, _)| v as Vertex).collect()
    }

    /// Drops isolated vertices and relabels the rest in increasing order.
    pub fn compact(&self) -> Hypergraph {
        let mut label = vec![Vertex::MAX; self.n];
        let mut next = 0;
        for (v, &d) in self.vertex_degrees().iter().enumerate() {
            if d > 0 {
                label[v] = next;
                next += 1;
            }
        }
        let edges = self.edges.iter().map(|t| t.0.map(|v| label[v as usize]));
        Hypergraph::new(next as usize, edges).expect("relabeling is injective")
    }

    /// Edges containing each covered pair, in ascending edge-index order.
    pub fn pair_index(&self) -> PairIndex {
        let mut map: FxHashMap<(Vertex, Vertex), Vec<usize>> = FxHashMap::default();
        for (i, t) in self.edges.iter().enumerate() {
            for p in t.pairs() {
                map.entry(p).or_default().push(i);
            }
        }
        PairIndex { map }
    }

    /// Parses the text format: a header line `n m` followed by `m` lines
    /// `a b c` with `a < b < c`. Lines starting with `#` and blank lines are
    /// ignored.
    pub fn parse(text: &str) -> Result<Hypergraph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) =
            lines.next().ok_or(Error::Parse { line: 0, message: "missing header line `n m`".into() })?;
        let nums = parse_numbers(hline, header, 2)?;
        let (n, m) = (nums[0] as usize, nums[1] as usize);

        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            if edges.len() == m {
                return Err(Error::Parse { line, message: format!("more than the declared {m} edges") });
            }
            let v = parse_numbers(line, l, 3)?;
            if v.iter().any(|&x| x >= n as u64) {
                return Err(Error::Parse { line, message: format!("vertex out of range [0, {n})") });
            }
            if !(v[0] < v[1] && v[1] < v[2]) {
                return Err(Error::Parse { line, message: format!("edge `{l}` must satisfy a < b < c") });
            }
            edges.push(((v[0] as Vertex, v[1] as Vertex, v[2] as Vertex), line));
        }
        if edges.len() != m {
            return Err(Error::Parse { line: 0, message: format!("declared {m} edges, found {}", edges.len()) });
        }

        let mut seen = rustc_hash::FxHashSet::default();
        let mut triples = Vec::with_capacity(m);
        for ((a, b, c), line) in edges {
            let t = Triple([a, b, c]);
            if !seen.insert(t) {
                return Err(Error::Parse { line, message: format!("duplicate edge `{t}`") });
            }
            triples.push(t);
        }
        Hypergraph::from_triples(n, triples)
    }

    /// Canonical text form, optionally preceded by `#` comment lines.
    pub fn to_text_with_comments(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.to_string());
        out
    }
}

fn parse_numbers(line: usize, text: &str, count: usize) -> Result<Vec<u64>> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != count {
        return Err(Error::Parse { line, message: format!("expected {count} integers, found `{text}`") });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<u64>().map_err(|_| Error::Parse { line, message: format!("`{f}` is not a non-negative integer") })
        })
        .collect()
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edges.len())?;
        for t in &self.edges {
            writeln!(f, "{t}")?;
        }
        Ok(())
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Hypergraph> {
        Hypergraph::parse(s)
    }
}

/// Map from a covered vertex pair to the indices of the edges containing it.
#[derive(Debug, Clone, Default)]
pub struct PairIndex {
    map: FxHashMap<(Vertex, Vertex), Vec<usize>>,
}

impl PairIndex {
    pub fn edges_with(&self, x: Vertex, y: Vertex) -> &[usize] {
        self.map.get(&pair(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn codegree(&self, x: Vertex, y: Vertex) -> usize {
        self.edges_with(x, y).len()
    }
}

/// Square bit matrix used for O(1) adjacency queries.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> BitMatrix {
        let words = n.div_ceil(64);
        BitMatrix { n, words, bits: vec![0; n * words] }
    }

    fn set(&mut self, x: usize, y: usize) {
        self.bits[x * self.words + y / 64] |= 1 << (y % 64);
    }

    fn get(&self, x: usize, y: usize) -> bool {
        x < self.n && y < self.n && self.bits[x * self.words + y / 64] & (1 << (y % 64)) != 0
    }
}

/// Simple undirected graph on `[0, n)`; used for the 2-shadow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowGraph {
    adjacency: Vec<Vec<Vertex>>,
    matrix: BitMatrix,
    edge_count: usize,
}

impl ShadowGraph {
    /// Builds a simple graph from a list of pairs. Loops are rejected,
    /// repeated pairs collapse.
    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<ShadowGraph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut matrix = BitMatrix::new(n);
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (x, y) in pairs {
            if x == y {
                return Err(Error::InvalidArgument(format!("self-loop at {x}")));
            }
            if x as usize >= n || y as usize >= n {
                return Err(Error::InvalidArgument(format!("pair ({x}, {y}) outside [0, {n})")));
            }
            if !matrix.get(x as usize, y as usize) {
                matrix.set(x as usize, y as usize);
                matrix.set(y as usize, x as usize);
                adjacency[x as usize].push(y);
                adjacency[y as usize].push(x);
                edge_count += 1;
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(ShadowGraph { adjacency, matrix, edge_count })
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn is_adjacent(&self, x: Vertex, y: Vertex) -> bool {
        self.matrix.get(x as usize, y as usize)
    }

    /// All edges as ascending pairs, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(x, ns)| {
            let x = x as Vertex;
            ns.iter().filter(move |&&y| y > x).map(move |&y| (x, y))
        })
    }
}

/// The 2-shadow: `{x, y}` is an edge iff some hyperedge contains both.
pub fn shadow(h: &Hypergraph) -> ShadowGraph {
    let pairs = h.edges().iter().flat_map(|t| t.pairs());
    ShadowGraph::from_pairs(h.vertex_count(), pairs).expect("hypergraph invariants give valid pairs")
}

/// Degrees of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexDegrees {
    /// Number of hyperedges containing the vertex.
    pub degree: usize,
    /// Degree in the 2-shadow.
    pub shadow_degree: usize,
    /// `shadow_degree - degree`. Signed: dense hypergraphs (e.g. the complete
    /// 3-graph on 5 vertices) have more edges than shadow neighbors at a
    /// vertex.
    pub excess_degree: i64,
    /// Number of blocks with an edge through the vertex, when known.
    pub block_degree: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DegreeProfile {
    vertices: Vec<VertexDegrees>,
}

impl DegreeProfile {
    pub fn get(&self, v: Vertex) -> &VertexDegrees {
        &self.vertices[v as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexDegrees> {
        self.vertices.iter()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Fills in block degrees.
    pub fn with_block_degrees(mut self, block_degrees: &[usize]) -> DegreeProfile {
        assert_eq!(block_degrees.len(), self.vertices.len());
        for (rec, &b) in self.vertices.iter_mut().zip(block_degrees) {
            rec.block_degree = Some(b);
        }
        self
    }

    pub fn total_degree(&self) -> usize {
        self.vertices.iter().map(|r| r.degree).sum()
    }

    pub fn total_shadow_degree(&self) -> usize {
        self.vertices.iter().map(|r| r.shadow_degree).sum()
    }

    pub fn total_excess(&self) -> i64 {
        self.vertices.iter().map(|r| r.excess_degree).sum()
    }
}

/// `d`, `d_s` and `d_ex` for every vertex; block degrees left empty.
pub fn degrees(h: &Hypergraph) -> DegreeProfile {
    let g = shadow(h);
    let vertices = h
        .vertex_degrees()
        .into_iter()
        .enumerate()
        .map(|(v, d)| {
            let ds = g.degree(v as Vertex);
            VertexDegrees { degree: d, shadow_degree: ds, excess_degree: ds as i64 - d as i64, block_degree: None }
        })
        .collect();
    DegreeProfile { vertices }
}

pub(crate) fn choose2(d: u64) -> u64 {
    d * d.saturating_sub(1) / 2
}

/// Number of 3-vertex paths, counted by middle vertex: `sum_v C(deg v, 2)`.
pub fn count_3paths(g: &ShadowGraph) -> u64 {
    (0..g.vertex_count()).map(|v| choose2(g.degree(v as Vertex) as u64)).sum()
}
