//! Exact `ex_3(n, BC_4)` for small `n`.
//!
//! Both searches return the lexicographically least maximizer: edge sets are
//! compared as ascending lists of triples, triples compared lexicographically.
//!
//! The branch-and-bound walks subsets in include-first depth-first order over
//! the lexicographic triple list, which visits edge sets in exactly that
//! order, so the first set reaching a new maximum size is the least one of
//! that size. Pruning rules, each keeping that first maximizer reachable:
//!
//! * Heredity: every subset of a Berge-C4-free hypergraph is Berge-C4-free,
//!   so a triple that cannot be added to the current set cannot be added to
//!   any extension of it. Only individually admissible later triples stay
//!   candidates and `size + candidates` bounds every extension.
//! * Analytic cap: no Berge-C4-free hypergraph on `n` vertices has more
//!   than `floor(upper_bound(n))` edges, so a branch that reaches the cap
//!   ends the search of its subtree.
//! * First-edge pinning: relabeling any maximizer so that one of its edges
//!   is `{0, 1, 2}` gives a maximizer containing the first triple, so the
//!   least maximizer contains `{0, 1, 2}` and only those sets are searched.
//!
//! Sets containing `{0, 1, 2}` split into independent subtrees by their
//! second triple. Subtrees never share an incumbent: each starts from the
//! size of the first-fit greedy set and records strictly larger sets. They
//! are explored in waves of `threads` and the node budget is charged in
//! subtree order, re-running a subtree when its share turns out smaller than
//! what it used. The outcome, node count included, is therefore the one a
//! single-threaded run produces.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::berge::{is_bc4_free, Bc4Tracker};
use crate::bounds::{ratio, upper_bound, UpperBound};
use crate::construct::all_triples;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    BruteForce,
    BranchAndBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub n: usize,
    pub max_edges: usize,
    pub witness: Hypergraph,
    /// False when the node budget cut the search short.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub method: Method,
}

impl SearchResult {
    /// Everything but the wall-clock time.
    pub fn same_outcome(&self, other: &SearchResult) -> bool {
        (self.n, self.max_edges, &self.witness, self.optimal, self.nodes_explored, self.method)
            == (other.n, other.max_edges, &other.witness, other.optimal, other.nodes_explored, other.method)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: u64,
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions { node_budget: 10_000_000, threads: 1 }
    }
}

/// Largest `n` accepted by [`brute_force_ex`].
pub const BRUTE_FORCE_MAX_N: usize = 6;

/// Exhaustive search over all edge subsets, largest sizes first and each
/// size in lexicographic order.
pub fn brute_force_ex(n: usize) -> Result<SearchResult> {
    if !(3..=BRUTE_FORCE_MAX_N).contains(&n) {
        return Err(Error::InvalidArgument(format!("brute force needs 3 <= n <= {BRUTE_FORCE_MAX_N}, got {n}")));
    }
    let start = Instant::now();
    let triples = all_triples(n);
    let mut checked = 0u64;
    for k in (0..=triples.len()).rev() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            checked += 1;
            let h = Hypergraph::from_triples(n, idx.iter().map(|&i| triples[i]).collect()).unwrap();
            if is_bc4_free(&h) {
                return Ok(SearchResult {
                    n,
                    max_edges: k,
                    witness: h,
                    optimal: true,
                    nodes_explored: checked,
                    elapsed: start.elapsed(),
                    method: Method::BruteForce,
                });
            }
            if !next_combination(&mut idx, triples.len()) {
                break;
            }
        }
    }
    unreachable!("the empty hypergraph is Berge-C4-free")
}

/// Advances to the next k-subset of `[0, len)` in lexicographic order.
fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let k = idx.len();
    let Some(i) = (0..k).rev().find(|&i| idx[i] < len - k + i) else {
        return false;
    };
    idx[i] += 1;
    for j in i + 1..k {
        idx[j] = idx[j - 1] + 1;
    }
    true
}

struct Subtree {
    best: Option<Vec<Triple>>,
    used: u64,
    complete: bool,
}

struct Dfs {
    tracker: Bc4Tracker,
    best_len: usize,
    best: Option<Vec<Triple>>,
    cap: usize,
    used: u64,
    budget: u64,
    aborted: bool,
    capped: bool,
}

impl Dfs {
    fn visit(&mut self, candidates: &[Triple]) {
        if self.used >= self.budget {
            self.aborted = true;
            return;
        }
        self.used += 1;
        if self.tracker.len() > self.best_len {
            self.best_len = self.tracker.len();
            self.best = Some(self.tracker.edges().to_vec());
            if self.best_len >= self.cap {
                self.capped = true;
                return;
            }
        }
        for (i, &t) in candidates.iter().enumerate() {
            let bound = (self.tracker.len() + candidates.len() - i).min(self.cap);
            if bound <= self.best_len {
                return;
            }
            self.tracker.push(t);
            let next: Vec<Triple> = candidates[i + 1..].iter().copied().filter(|&c| self.tracker.admits(c)).collect();
            self.visit(&next);
            self.tracker.pop();
            if self.aborted || self.capped {
                return;
            }
        }
    }
}

struct Plan {
    n: usize,
    first: Triple,
    /// Admissible triples after `{0, 1, 2}`, in order.
    roots: Vec<Triple>,
    seed_len: usize,
    cap: usize,
}

impl Plan {
    fn run(&self, i: usize, budget: u64) -> Subtree {
        let mut tracker = Bc4Tracker::new(self.n);
        tracker.push(self.first);
        tracker.push(self.roots[i]);
        let candidates: Vec<Triple> = self.roots[i + 1..].iter().copied().filter(|&c| tracker.admits(c)).collect();
        let mut dfs = Dfs {
            tracker,
            best_len: self.seed_len.saturating_sub(1).max(1),
            best: None,
            cap: self.cap,
            used: 0,
            budget,
            aborted: false,
            capped: false,
        };
        dfs.visit(&candidates);
        Subtree { best: dfs.best, used: dfs.used, complete: !dfs.aborted }
    }
}

fn first_fit(n: usize) -> Vec<Triple> {
    let mut tracker = Bc4Tracker::new(n);
    for t in all_triples(n) {
        if tracker.admits(t) {
            tracker.push(t);
        }
    }
    tracker.edges().to_vec()
}

/// Depth-first branch-and-bound; see the module docs for the pruning rules
/// and the budget accounting.
pub fn branch_and_bound_ex(n: usize, options: SearchOptions) -> Result<SearchResult> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("search needs n >= 3, got {n}")));
    }
    let start = Instant::now();
    let triples = all_triples(n);
    let first = triples[0];
    let greedy = first_fit(n);
    let cap = upper_bound(n as u64)?.floor() as usize;

    let mut root = Bc4Tracker::new(n);
    root.push(first);
    let roots: Vec<Triple> = triples[1..].iter().copied().filter(|&t| root.admits(t)).collect();
    let plan = Plan { n, first, roots, seed_len: greedy.len(), cap };

    let mut remaining = options.node_budget;
    let mut nodes = 0u64;
    let mut complete = true;
    // the root node holds {0, 1, 2} alone
    if remaining == 0 {
        complete = false;
    } else {
        remaining -= 1;
        nodes += 1;
    }

    let mut best: Vec<Triple> = greedy;
    let threads = options.threads.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;

    let mut capped = best.len() >= cap;
    let mut wave_start = 0;
    while wave_start < plan.roots.len() && complete && !capped {
        let wave_end = (wave_start + threads).min(plan.roots.len());
        let wave_budget = remaining;
        let results: Vec<Subtree> =
            pool.install(|| (wave_start..wave_end).into_par_iter().map(|i| plan.run(i, wave_budget)).collect());
        for (i, mut sub) in (wave_start..wave_end).zip(results) {
            if !complete || capped {
                break;
            }
            if sub.used > remaining {
                sub = plan.run(i, remaining);
            }
            remaining -= sub.used;
            nodes += sub.used;
            if let Some(found) = sub.best {
                if found.len() > best.len() {
                    capped = found.len() >= cap;
                    best = found;
                }
            }
            if !sub.complete {
                complete = false;
            }
        }
        wave_start = wave_end;
    }

    let witness = Hypergraph::from_triples(n, best).expect("tracked edges are distinct");
    Ok(SearchResult {
        n,
        max_edges: witness.edge_count(),
        witness,
        optimal: complete || capped,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        method: Method::BranchAndBound,
    })
}

/// One line of [`ex_table`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub result: SearchResult,
    pub upper_bound: UpperBound,
}

/// `ex_3(n, BC_4)` for `n = 3..=n_max`: brute force up to
/// [`BRUTE_FORCE_MAX_N`], branch-and-bound beyond.
pub fn ex_table(n_max: usize, options: SearchOptions) -> Result<Vec<TableRow>> {
    if n_max < 3 {
        return Err(Error::InvalidArgument(format!("table needs n_max >= 3, got {n_max}")));
    }
    (3..=n_max)
        .map(|n| {
            let result = if n <= BRUTE_FORCE_MAX_N { brute_force_ex(n)? } else { branch_and_bound_ex(n, options)? };
            Ok(TableRow { result, upper_bound: upper_bound(n as u64)? })
        })
        .collect()
}

/// Tab-separated rendering: header, then one row per `n` with the bound to
/// six decimals and `max_edges / n^{3/2}` to twelve significant digits.
pub fn format_table(rows: &[TableRow]) -> String {
    let mut out = String::from("n\tmax_edges\toptimal\tupper_bound\tratio\n");
    for row in rows {
        let r = &row.result;
        let (lo, _) = row.upper_bound.enclosure(12);
        let q = ratio(r.n as u64, r.max_edges as u64);
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.n,
            r.max_edges,
            r.optimal,
            crate::bounds::fmt_decimal(&lo, 6),
            format_significant(&q),
        ));
    }
    out
}

fn format_significant(q: &num_rational::BigRational) -> String {
    use num_traits::ToPrimitive;
    let v = q.to_f64().unwrap();
    if v == 0.0 {
        return "0".into();
    }
    let digits = (11 - v.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{v:.digits$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
