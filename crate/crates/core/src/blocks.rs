//! Block decomposition.
//!
//! Two edges are linked when they share exactly two vertices; a block is a
//! class of the transitive closure of that relation together with the union
//! of its edges. Blocks partition the edge set.

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Triple, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BlockKind {
    /// A distinguished edge meets every other edge in two vertices, and any
    /// two other edges meet inside it.
    #[serde(rename = "TYPE1")]
    Type1,
    /// Exactly three of the four triples on four vertices.
    #[serde(rename = "TYPE2")]
    Type2,
    #[serde(rename = "OTHER")]
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    /// Ascending edge indices.
    pub edges: Vec<usize>,
    /// Ascending union of the member edges.
    pub vertices: Vec<Vertex>,
    pub kind: BlockKind,
    pub leaves: Vec<usize>,
}

impl Block {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    fn triples(&self, h: &Hypergraph) -> Vec<Triple> {
        self.edges.iter().map(|&i| h.edge(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Ordered by smallest member edge index.
    pub blocks: Vec<Block>,
    pub edge_to_block: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_of(&self, edge: usize) -> &Block {
        &self.blocks[self.edge_to_block[edge]]
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(len: usize) -> UnionFind {
        UnionFind { parent: (0..len).collect(), rank: vec![0; len] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
    }
}

/// Splits the edge set into blocks. Edges sharing a pair land in the same
/// bucket, and distinct edges share at most two vertices, so unioning each
/// bucket realizes the "share exactly two vertices" closure.
pub fn decompose(h: &Hypergraph) -> BlockDecomposition {
    let m = h.edge_count();
    let mut uf = UnionFind::new(m);
    let mut first_with_pair: FxHashMap<(Vertex, Vertex), usize> = FxHashMap::default();
    for (i, t) in h.edges().iter().enumerate() {
        for p in t.pairs() {
            let first = *first_with_pair.entry(p).or_insert(i);
            uf.union(first, i);
        }
    }

    let mut root_to_block: FxHashMap<usize, usize> = FxHashMap::default();
    let mut members: Vec<Vec<usize>> = Vec::new();
    let mut edge_to_block = vec![0; m];
    for (i, slot) in edge_to_block.iter_mut().enumerate() {
        let root = uf.find(i);
        let b = *root_to_block.entry(root).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[b].push(i);
        *slot = b;
    }

    let blocks = members
        .into_iter()
        .map(|edges| {
            let mut vertices: Vec<Vertex> = edges.iter().flat_map(|&i| h.edge(i).vertices()).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let mut block = Block { edges, vertices, kind: BlockKind::Other, leaves: Vec::new() };
            block.kind = classify(h, &block);
            block.leaves = leaf_edges(h, &block);
            block
        })
        .collect();

    BlockDecomposition { blocks, edge_to_block }
}

/// Edges of the block having a vertex met by no other edge of the block.
pub fn leaf_edges(h: &Hypergraph, b: &Block) -> Vec<usize> {
    let mut count: FxHashMap<Vertex, usize> = FxHashMap::default();
    for &i in &b.edges {
        for v in h.edge(i).vertices() {
            *count.entry(v).or_default() += 1;
        }
    }
    b.edges.iter().copied().filter(|&i| h.edge(i).vertices().iter().any(|v| count[v] == 1)).collect()
}

fn is_k4_minus(triples: &[Triple], vertex_count: usize) -> bool {
    triples.len() == 3 && vertex_count == 4
}

fn is_type1_center(e: &Triple, others: &[Triple]) -> bool {
    if others.iter().any(|f| e.shared(f) != 2) {
        return false;
    }
    others.iter().enumerate().all(|(i, f1)| {
        others[i + 1..].iter().all(|f2| f1.vertices().iter().filter(|v| f2.contains(**v)).all(|v| e.contains(*v)))
    })
}

/// Type 2 is checked first; a block can only be type 1 via some edge passing
/// the distinguished-edge test.
pub fn classify(h: &Hypergraph, b: &Block) -> BlockKind {
    let triples = b.triples(h);
    // three distinct triples on four vertices are exactly K4 minus an edge
    if is_k4_minus(&triples, b.vertex_count()) {
        return BlockKind::Type2;
    }
    let type1 = (0..triples.len()).any(|k| {
        let others: Vec<Triple> = triples.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, t)| *t).collect();
        is_type1_center(&triples[k], &others)
    });
    if type1 {
        BlockKind::Type1
    } else {
        BlockKind::Other
    }
}

/// `d_b(v)`: number of blocks having an edge through `v`.
pub fn block_degrees(h: &Hypergraph, d: &BlockDecomposition) -> Vec<usize> {
    let mut deg = vec![0; h.vertex_count()];
    for b in &d.blocks {
        for &v in &b.vertices {
            deg[v as usize] += 1;
        }
    }
    deg
}

/// Excess degree of `v` computed inside the block only.
pub fn excess_within(h: &Hypergraph, b: &Block, v: Vertex) -> Result<i64> {
    if b.vertices.binary_search(&v).is_err() {
        return Err(Error::InvalidArgument(format!("vertex {v} is not in the block")));
    }
    let through: Vec<Triple> = b.edges.iter().map(|&i| h.edge(i)).filter(|t| t.contains(v)).collect();
    let mut nbrs: Vec<Vertex> = through.iter().flat_map(|t| t.vertices()).filter(|&u| u != v).collect();
    nbrs.sort_unstable();
    nbrs.dedup();
    Ok(nbrs.len() as i64 - through.len() as i64)
}

/// Sum of [`excess_within`] over the block's vertices.
pub fn block_excess(h: &Hypergraph, b: &Block) -> i64 {
    b.vertices.iter().map(|&v| excess_within(h, b, v).unwrap()).sum()
}
