//! Berge 4-cycle analysis for 3-uniform hypergraphs.
//!
//! The crate covers the combinatorial objects that show up when bounding the
//! number of edges of a 3-uniform hypergraph with no Berge cycle of length
//! four:
//!
//! * [`hypergraph`]: the hypergraph type, its 2-shadow and per-vertex degrees.
//! * [`berge`]: Berge path and cycle detection with verifiable witnesses.
//! * [`blocks`]: the partition of the edge set into blocks (closure of the
//!   "share two vertices" relation) and their classification.
//! * [`census`]: 3-paths, good 3-paths, representative edges and rare
//!   4-cycles of the shadow, plus the counting claims built on them.
//! * [`bounds`]: exact evaluation of the inequality chain leading to the
//!   `n^{3/2}/sqrt(10)` upper bound, and the bound itself per `n`.
//! * [`construct`]: the projective-plane lower-bound construction and a
//!   seeded random generator of Berge-C4-free hypergraphs.
//! * [`search`]: exact values of `ex_3(n, BC_4)` for small `n`.

pub mod berge;
pub mod blocks;
pub mod bounds;
pub mod census;
pub mod construct;
mod error;
mod field;
pub mod hypergraph;
mod matching;
pub mod search;

pub use berge::{find_berge_cycle, find_berge_path, is_bc4_free, BergeCycle, BergePath};
pub use blocks::{decompose, Block, BlockDecomposition, BlockKind};
pub use bounds::{ratio, upper_bound, verify_chain, BoundReport, UpperBound};
pub use census::{census, CensusReport, RareRule};
pub use construct::{lower_bound_construction, random_bc4free, BipartiteGraph, Side};
pub use error::{Error, Result};
pub use hypergraph::{count_3paths, degrees, shadow, DegreeProfile, Hypergraph, ShadowGraph, Triple, Vertex};
pub use search::{SearchOptions, SearchResult};
