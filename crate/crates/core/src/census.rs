//! 3-paths and 4-cycles of the 2-shadow.
//!
//! A 4-cycle `(a, b, c, d)` of the shadow has diagonals `{a, c}` and
//! `{b, d}`. Its representative edges are the hyperedges lying inside
//! `{a, b, c, d}`; it is rare when no two of those hyperedges contain the same
//! diagonal. A 3-path `x, u, y` is good when `{x, u, y}` is not a hyperedge
//! and no vertex `w` closes it into a rare 4-cycle `w, x, u, y`.

use std::collections::BTreeMap;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::berge::is_bc4_free;
use crate::blocks::{block_degrees, decompose};
use crate::error::{Error, Result};
use crate::hypergraph::{choose2, count_3paths, shadow, Hypergraph, PairIndex, ShadowGraph, Triple, Vertex};

/// Which hyperedges may witness a shared diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RareRule {
    /// Only hyperedges inside the cycle's four vertices count.
    #[default]
    Induced,
    /// Any two hyperedges containing a diagonal count, wherever their third
    /// vertex lies.
    AnyEdges,
}

/// A shadow 4-cycle in canonical form: smallest vertex first, then its
/// smaller cycle neighbor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourCycle {
    pub vertices: [Vertex; 4],
    pub representatives: Vec<usize>,
    pub rare: bool,
}

/// Rotates and reflects a 4-cycle into canonical form.
pub fn canonical_cycle(c: [Vertex; 4]) -> [Vertex; 4] {
    let start = (0..4).min_by_key(|&i| c[i]).unwrap();
    let fwd = [c[start], c[(start + 1) % 4], c[(start + 2) % 4], c[(start + 3) % 4]];
    if fwd[1] < fwd[3] {
        fwd
    } else {
        [fwd[0], fwd[3], fwd[2], fwd[1]]
    }
}

fn check_cycle(g: &ShadowGraph, c: [Vertex; 4]) -> Result<()> {
    let mut sorted = c;
    sorted.sort_unstable();
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    let in_range = c.iter().all(|&v| (v as usize) < g.vertex_count());
    if !distinct || !in_range || !(0..4).all(|i| g.is_adjacent(c[i], c[(i + 1) % 4])) {
        return Err(Error::InvalidArgument(format!("{c:?} is not a 4-cycle of the shadow")));
    }
    Ok(())
}

fn inside(h: &Hypergraph, c: [Vertex; 4]) -> Vec<usize> {
    // the four triples on the cycle's vertex set, looked up directly
    let mut reps: Vec<usize> = (0..4)
        .filter_map(|skip| {
            let v: Vec<Vertex> = (0..4).filter(|&i| i != skip).map(|i| c[i]).collect();
            h.index_of(&Triple::new(v[0], v[1], v[2]).unwrap())
        })
        .collect();
    reps.sort_unstable();
    reps
}

fn rare_from(h: &Hypergraph, index: &PairIndex, c: [Vertex; 4], reps: &[usize], rule: RareRule) -> bool {
    let diagonals = [(c[0], c[2]), (c[1], c[3])];
    match rule {
        RareRule::Induced => {
            diagonals.iter().all(|&(x, y)| reps.iter().filter(|&&e| h.edge(e).contains_pair(x, y)).count() < 2)
        }
        RareRule::AnyEdges => diagonals.iter().all(|&(x, y)| index.codegree(x, y) < 2),
    }
}

/// Hyperedges whose three vertices all lie on the cycle.
pub fn representative_edges(h: &Hypergraph, c: [Vertex; 4]) -> Result<Vec<usize>> {
    check_cycle(&shadow(h), c)?;
    Ok(inside(h, c))
}

pub fn is_rare(h: &Hypergraph, c: [Vertex; 4], rule: RareRule) -> Result<bool> {
    check_cycle(&shadow(h), c)?;
    Ok(rare_from(h, &h.pair_index(), c, &inside(h, c), rule))
}

/// Direct test of the good 3-path definition for `x1, x2, x3`.
pub fn is_good_3path(h: &Hypergraph, x1: Vertex, x2: Vertex, x3: Vertex, rule: RareRule) -> Result<bool> {
    let g = shadow(h);
    let n = g.vertex_count();
    if [x1, x2, x3].iter().any(|&v| v as usize >= n) || x1 == x3 || !g.is_adjacent(x1, x2) || !g.is_adjacent(x2, x3) {
        return Err(Error::InvalidArgument(format!("({x1}, {x2}, {x3}) is not a 3-path of the shadow")));
    }
    if h.contains_edge(&Triple::new(x1, x2, x3).unwrap()) {
        return Ok(false);
    }
    let index = h.pair_index();
    for x in 0..n as Vertex {
        if x == x1 || x == x2 || x == x3 || !g.is_adjacent(x, x1) || !g.is_adjacent(x, x3) {
            continue;
        }
        let c = [x, x1, x2, x3];
        if rare_from(h, &index, c, &inside(h, c), rule) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All 4-cycles of the shadow, once each, in canonical lexicographic order.
pub fn four_cycles(h: &Hypergraph, rule: RareRule) -> Vec<FourCycle> {
    let g = shadow(h);
    let index = h.pair_index();
    let mut out = Vec::new();
    for_each_cycle(&g, |c| {
        let reps = inside(h, c);
        let rare = rare_from(h, &index, c, &reps, rule);
        out.push(FourCycle { vertices: c, representatives: reps, rare });
    });
    out
}

fn for_each_cycle(g: &ShadowGraph, mut f: impl FnMut([Vertex; 4])) {
    for a in 0..g.vertex_count() as Vertex {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a) {
            for &c in g.neighbors(b).iter().filter(|&&c| c > a) {
                for &d in g.neighbors(c).iter().filter(|&&d| d > b) {
                    if d != c && g.is_adjacent(d, a) {
                        f([a, b, c, d]);
                    }
                }
            }
        }
    }
}

/// An inequality evaluated on integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub value: i64,
    pub bound: i64,
    pub pass: bool,
}

impl ClaimCheck {
    fn at_most(value: i64, bound: i64) -> ClaimCheck {
        ClaimCheck { value, bound, pass: value <= bound }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub pair: (Vertex, Vertex),
    pub good: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub rule: RareRule,
    /// Whether the input has no Berge C4; the claims are only asserted then.
    pub bc4_free: bool,
    pub total_3paths: u64,
    pub good_3paths: u64,
    pub nongood_3paths: u64,
    pub four_cycles: u64,
    pub rare_4cycles: u64,
    /// 4-cycles with no representative edge.
    pub unrepresented_4cycles: u64,
    pub max_representatives: usize,
    /// Good 3-path counts per endpoint pair, pairs with zero omitted.
    pub per_pair_good: Vec<PairCount>,
    /// At most two good 3-paths between any two vertices.
    pub claim1: ClaimCheck,
    /// At most `6|E|` rare 4-cycles.
    pub claim2: ClaimCheck,
    /// Good 3-paths at most `2 C(n,2) - 4 sum_v C(d_b(v), 2)`.
    pub claim3: ClaimCheck,
    /// Non-good 3-paths at most `21|E|`.
    pub nongood: ClaimCheck,
}

impl CensusReport {
    pub fn claims_pass(&self) -> bool {
        self.claim1.pass && self.claim2.pass && self.claim3.pass && self.nongood.pass
    }
}

/// Full census with the default [`RareRule::Induced`].
pub fn census(h: &Hypergraph) -> CensusReport {
    census_with(h, RareRule::Induced)
}

pub fn census_with(h: &Hypergraph, rule: RareRule) -> CensusReport {
    let g = shadow(h);
    let index = h.pair_index();
    let m = h.edge_count() as i64;
    let n = h.vertex_count() as i64;

    // (middle, low end, high end) of every 3-path lying on a rare cycle
    let mut on_rare: FxHashSet<(Vertex, Vertex, Vertex)> = FxHashSet::default();
    let (mut cycles, mut rare, mut unrepresented, mut max_reps) = (0u64, 0u64, 0u64, 0usize);
    for_each_cycle(&g, |c| {
        cycles += 1;
        let reps = inside(h, c);
        if reps.is_empty() {
            unrepresented += 1;
        }
        max_reps = max_reps.max(reps.len());
        if rare_from(h, &index, c, &reps, rule) {
            rare += 1;
            for i in 0..4 {
                let (x, u, y) = (c[(i + 3) % 4], c[i], c[(i + 1) % 4]);
                on_rare.insert((u, x.min(y), x.max(y)));
            }
        }
    });

    let mut total = 0u64;
    let mut per_pair: BTreeMap<(Vertex, Vertex), u64> = BTreeMap::new();
    for u in 0..g.vertex_count() as Vertex {
        let nb = g.neighbors(u);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                total += 1;
                let closed = h.contains_edge(&Triple::new(x, u, y).unwrap());
                if !closed && !on_rare.contains(&(u, x, y)) {
                    *per_pair.entry((x, y)).or_default() += 1;
                }
            }
        }
    }
    assert_eq!(total, count_3paths(&g), "3-path enumeration disagrees with the degree identity");

    let good: u64 = per_pair.values().sum();
    let nongood = total - good;
    let max_per_pair = per_pair.values().copied().max().unwrap_or(0);

    let db = block_degrees(h, &decompose(h));
    let correction: i64 = db.iter().map(|&d| choose2(d as u64) as i64).sum();
    let claim3_bound = 2 * (n * (n - 1) / 2) - 4 * correction;

    CensusReport {
        rule,
        bc4_free: is_bc4_free(h),
        total_3paths: total,
        good_3paths: good,
        nongood_3paths: nongood,
        four_cycles: cycles,
        rare_4cycles: rare,
        unrepresented_4cycles: unrepresented,
        max_representatives: max_reps,
        per_pair_good: per_pair.into_iter().map(|(pair, good)| PairCount { pair, good }).collect(),
        claim1: ClaimCheck::at_most(max_per_pair as i64, 2),
        claim2: ClaimCheck::at_most(rare as i64, 6 * m),
        claim3: ClaimCheck::at_most(good as i64, claim3_bound),
        nongood: ClaimCheck::at_most(nongood as i64, 21 * m),
    }
}

pub fn check_claim1(h: &Hypergraph) -> ClaimCheck {
    census(h).claim1
}

pub fn check_claim2(h: &Hypergraph) -> ClaimCheck {
    census(h).claim2
}

pub fn check_claim3(h: &Hypergraph) -> ClaimCheck {
    census(h).claim3
}

pub fn check_nongood(h: &Hypergraph) -> ClaimCheck {
    census(h).nongood
}
