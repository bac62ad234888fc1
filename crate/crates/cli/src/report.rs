//! Versioned JSON reports.
//!
//! Every analysis report has the keys `schema`, `tool_version`, `command`,
//! `input_digest` and `result`, in that order. The digest is the SHA-256 of
//! the canonical text form of the parsed hypergraph. Exact rationals are
//! rendered as `"p/q"`.

use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use sha2::{Digest, Sha256};

use berge_core::berge::find_berge_cycle;
use berge_core::blocks::{block_degrees, block_excess, BlockKind};
use berge_core::census::{census_with, ClaimCheck, PairCount, RareRule};
use berge_core::hypergraph::{DegreeProfile, Triple, Vertex};
use berge_core::{decompose, degrees, verify_chain, BergeCycle, Error, Hypergraph};

pub const SCHEMA: &str = "berge-report/1";

pub const EXIT_OK: u8 = 0;
pub const EXIT_PROPERTY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_REFUSED: u8 = 3;

/// What the process prints and returns.
pub struct Outcome {
    stdout: String,
    stderr: Option<String>,
    code: u8,
}

impl Outcome {
    pub fn text(stdout: String) -> Outcome {
        Outcome { stdout, stderr: None, code: EXIT_OK }
    }

    pub fn input_error(message: String) -> Outcome {
        Outcome { stdout: String::new(), stderr: Some(format!("error: {message}")), code: EXIT_INPUT }
    }

    pub fn emit(self) -> ExitCode {
        if !self.stdout.is_empty() {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(self.stdout.as_bytes());
            let _ = out.flush();
        }
        if let Some(e) = self.stderr {
            eprintln!("{e}");
        }
        ExitCode::from(self.code)
    }
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    schema: &'static str,
    tool_version: &'static str,
    command: &'a str,
    input_digest: String,
    result: T,
}

fn digest(h: &Hypergraph) -> String {
    let hash = Sha256::digest(h.to_string().as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

fn render<T: Serialize>(command: &str, h: &Hypergraph, result: T, code: u8) -> Outcome {
    let report =
        Report { schema: SCHEMA, tool_version: env!("CARGO_PKG_VERSION"), command, input_digest: digest(h), result };
    let mut stdout = serde_json::to_string_pretty(&report).expect("reports serialize");
    stdout.push('\n');
    Outcome { stdout, stderr: None, code }
}

#[derive(Serialize)]
struct ShadowResult {
    vertex_count: usize,
    edge_count: usize,
    shadow_edge_count: usize,
    shadow_edges: Vec<(Vertex, Vertex)>,
    degrees: DegreeProfile,
}

pub fn shadow(h: &Hypergraph) -> Outcome {
    let g = berge_core::shadow(h);
    let db = block_degrees(h, &decompose(h));
    let result = ShadowResult {
        vertex_count: h.vertex_count(),
        edge_count: h.edge_count(),
        shadow_edge_count: g.edge_count(),
        shadow_edges: g.pairs().collect(),
        degrees: degrees(h).with_block_degrees(&db),
    };
    render("shadow", h, result, EXIT_OK)
}

#[derive(Serialize)]
struct Witness {
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
    edge_triples: Vec<Triple>,
}

impl Witness {
    fn new(h: &Hypergraph, w: &BergeCycle) -> Witness {
        Witness {
            vertices: w.vertices.clone(),
            edges: w.edges.clone(),
            edge_triples: w.edges.iter().map(|&i| h.edge(i)).collect(),
        }
    }
}

#[derive(Serialize)]
struct CheckResult {
    length: usize,
    status: &'static str,
    witness: Option<Witness>,
}

pub fn check(h: &Hypergraph, length: usize) -> Result<Outcome, Outcome> {
    let found = find_berge_cycle(h, length).map_err(|e| Outcome::input_error(e.to_string()))?;
    let result = CheckResult {
        length,
        status: if found.is_some() { "cycle" } else { "free" },
        witness: found.map(|w| Witness::new(h, &w)),
    };
    Ok(render("check", h, result, EXIT_OK))
}

#[derive(Serialize)]
struct BlockEntry {
    edges: Vec<usize>,
    vertices: Vec<Vertex>,
    kind: BlockKind,
    leaves: Vec<usize>,
    excess_sum: i64,
}

#[derive(Serialize)]
struct BlocksResult {
    block_count: usize,
    blocks: Vec<BlockEntry>,
    block_degrees: Vec<usize>,
}

pub fn blocks(h: &Hypergraph) -> Outcome {
    let d = decompose(h);
    let entries = d
        .blocks
        .iter()
        .map(|b| BlockEntry {
            edges: b.edges.clone(),
            vertices: b.vertices.clone(),
            kind: b.kind,
            leaves: b.leaves.clone(),
            excess_sum: block_excess(h, b),
        })
        .collect();
    let result = BlocksResult { block_count: d.len(), blocks: entries, block_degrees: block_degrees(h, &d) };
    render("blocks", h, result, EXIT_OK)
}

#[derive(Serialize)]
struct ClaimEntry {
    value: i64,
    bound: i64,
    status: &'static str,
}

fn claim_entry(c: &ClaimCheck, hypothesis: bool) -> ClaimEntry {
    let status = match (hypothesis, c.pass) {
        (false, _) => "hypothesis not met",
        (true, true) => "pass",
        (true, false) => "fail",
    };
    ClaimEntry { value: c.value, bound: c.bound, status }
}

#[derive(Serialize)]
struct Claims {
    claim1_good_paths_per_pair: ClaimEntry,
    claim2_rare_cycles: ClaimEntry,
    claim3_good_paths: ClaimEntry,
    nongood_paths: ClaimEntry,
}

#[derive(Serialize)]
struct CensusResult {
    rare_rule: RareRule,
    bc4_free: bool,
    total_3paths: u64,
    good_3paths: u64,
    nongood_3paths: u64,
    four_cycles: u64,
    rare_4cycles: u64,
    unrepresented_4cycles: u64,
    max_representatives: usize,
    claims: Claims,
    per_pair_good: Vec<PairCount>,
}

pub fn census(h: &Hypergraph, rule: RareRule) -> Outcome {
    let c = census_with(h, rule);
    let hyp = c.bc4_free;
    let claims = Claims {
        claim1_good_paths_per_pair: claim_entry(&c.claim1, hyp),
        claim2_rare_cycles: claim_entry(&c.claim2, hyp),
        claim3_good_paths: claim_entry(&c.claim3, hyp),
        nongood_paths: claim_entry(&c.nongood, hyp),
    };
    let code = if hyp && !c.claims_pass() { EXIT_PROPERTY_FAILED } else { EXIT_OK };
    let result = CensusResult {
        rare_rule: c.rule,
        bc4_free: c.bc4_free,
        total_3paths: c.total_3paths,
        good_3paths: c.good_3paths,
        nongood_3paths: c.nongood_3paths,
        four_cycles: c.four_cycles,
        rare_4cycles: c.rare_4cycles,
        unrepresented_4cycles: c.unrepresented_4cycles,
        max_representatives: c.max_representatives,
        claims,
        per_pair_good: c.per_pair_good.clone(),
    };
    render("census", h, result, code)
}

#[derive(Serialize)]
struct Refusal {
    refused: &'static str,
    message: String,
    witness: Option<Witness>,
    isolated_vertices: Vec<Vertex>,
}

pub fn verify(h: &Hypergraph) -> Outcome {
    match verify_chain(h) {
        Ok(report) => {
            let code = if report.all_pass() { EXIT_OK } else { EXIT_PROPERTY_FAILED };
            render("verify", h, report, code)
        }
        Err(e) => {
            let refusal = match &e {
                Error::NotBc4Free(w) => Refusal {
                    refused: "not-bc4-free",
                    message: e.to_string(),
                    witness: Some(Witness::new(h, w)),
                    isolated_vertices: Vec::new(),
                },
                Error::IsolatedVertices(v) => Refusal {
                    refused: "isolated-vertices",
                    message: e.to_string(),
                    witness: None,
                    isolated_vertices: v.clone(),
                },
                _ => return Outcome::input_error(e.to_string()),
            };
            render("verify", h, refusal, EXIT_REFUSED)
        }
    }
}
