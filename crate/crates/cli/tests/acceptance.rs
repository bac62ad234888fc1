//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p berge-cli --test acceptance`.

use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use berge_core::blocks::{block_excess, BlockKind};
use berge_core::bounds::ratio_f64;
use berge_core::census::{four_cycles, RareRule};
use berge_core::search::{branch_and_bound_ex, brute_force_ex, ex_table, format_table, SearchOptions};
use berge_core::{
    census, count_3paths, decompose, degrees, find_berge_cycle, is_bc4_free, lower_bound_construction, random_bc4free,
    shadow, upper_bound, verify_chain, Hypergraph, ShadowGraph, Vertex,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn naive_has_bc4(h: &Hypergraph) -> bool {
    let n = h.vertex_count() as Vertex;
    let e: Vec<[Vertex; 3]> = h.edges().iter().map(|t| t.vertices()).collect();
    let cov = |i: usize, x: Vertex, y: Vertex| e[i].contains(&x) && e[i].contains(&y);
    let m = e.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
                        continue;
                    }
                    for e0 in (0..m).filter(|&i| cov(i, a, b)) {
                        for e1 in (0..m).filter(|&i| i != e0 && cov(i, b, c)) {
                            for e2 in (0..m).filter(|&i| i != e0 && i != e1 && cov(i, c, d)) {
                                if (0..m).any(|i| i != e0 && i != e1 && i != e2 && cov(i, d, a)) {
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

fn brute_3paths(g: &ShadowGraph) -> u64 {
    let n = g.vertex_count() as Vertex;
    let mut count = 0;
    for x in 0..n {
        for y in x + 1..n {
            count += (0..n).filter(|&u| u != x && u != y && g.is_adjacent(x, u) && g.is_adjacent(u, y)).count() as u64;
        }
    }
    count
}

fn criterion1() -> Outcome {
    let start = Instant::now();
    let golden = include_str!("../../core/tests/golden/ex_table_n6.tsv");
    let expected = [1, 3, 3, 4];
    for (n, &want) in (3..=6).zip(&expected) {
        let bf = brute_force_ex(n).map_err(|e| e.to_string())?;
        let bb = branch_and_bound_ex(n, SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(bf.max_edges == want && bb.max_edges == want && bb.optimal, || {
            format!("n={n}: brute force {}, branch-and-bound {}, expected {want}", bf.max_edges, bb.max_edges)
        })?;
    }
    let table = format_table(&ex_table(6, SearchOptions::default()).map_err(|e| e.to_string())?);
    ensure(table == golden, || "table differs from the golden file".into())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!("ex = 1, 3, 3, 4 for n = 3..6 in {secs:.1} s"))
}

fn criterion2() -> Outcome {
    for n in 3..=8usize {
        let r = if n <= 6 {
            brute_force_ex(n)
        } else {
            branch_and_bound_ex(n, SearchOptions { node_budget: 10_000_000, threads: 4 })
        }
        .map_err(|e| e.to_string())?;
        let b = upper_bound(n as u64).map_err(|e| e.to_string())?;
        ensure(b.admits(r.max_edges as u64), || format!("n={n}: {} edges exceed {}", r.max_edges, b.to_f64()))?;
    }
    let norm = upper_bound(1_000_000).map_err(|e| e.to_string())?.normalized();
    ensure((norm - 1.0).abs() <= 0.02, || format!("normalized bound {norm} at n = 10^6"))?;
    Ok(format!("n = 3..8 below the bound; normalized bound at 10^6 = {norm:.5}"))
}

fn criterion3() -> Outcome {
    let start = Instant::now();
    let mut prev = f64::INFINITY;
    let mut ratios = Vec::new();
    for q in QS {
        let h = lower_bound_construction(q).map_err(|e| e.to_string())?;
        let p = q * q + q + 1;
        let (n, m) = (h.vertex_count() as u64, h.edge_count() as u64);
        ensure(n == 3 * p && m == (q + 1) * p, || format!("q={q}: n={n} m={m}"))?;
        ensure(is_bc4_free(&h), || format!("q={q}: not Berge-C4-free"))?;
        let r = ratio_f64(n, m);
        ensure(r < prev && (0.1924..=0.22).contains(&r), || format!("q={q}: ratio {r} after {prev}"))?;
        prev = r;
        ratios.push(r);
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 300.0, || format!("took {secs:.1} s"))?;
    Ok(format!("ratio {:.4} (q=2) down to {:.4} (q=16) in {secs:.1} s", ratios[0], ratios[ratios.len() - 1]))
}

fn claim_violations(h: &Hypergraph) -> Vec<String> {
    let mut bad = Vec::new();
    let c = census(h);
    for (name, check) in [("claim1", &c.claim1), ("claim2", &c.claim2), ("claim3", &c.claim3), ("nongood", &c.nongood)]
    {
        if !check.pass {
            bad.push(format!("{name}: {} > {}", check.value, check.bound));
        }
    }
    let d = decompose(h);
    for b in &d.blocks {
        if b.vertices.len() <= b.edges.len() {
            bad.push(format!("block with {} vertices and {} edges", b.vertices.len(), b.edges.len()));
        }
        if b.kind == BlockKind::Other {
            bad.push("block of kind OTHER".into());
        }
        if block_excess(h, b) < b.edges.len() as i64 {
            bad.push("block excess below its edge count".into());
        }
    }
    for cycle in four_cycles(h, RareRule::Induced) {
        if !(1..=3).contains(&cycle.representatives.len()) {
            bad.push(format!("4-cycle {:?} has {} representatives", cycle.vertices, cycle.representatives.len()));
        }
    }
    // the chain assumes no isolated vertices; dropping them changes nothing else
    match verify_chain(&h.compact()) {
        Ok(r) => {
            for i in r.inequalities.iter().filter(|i| !i.pass) {
                bad.push(format!("{} fails", i.label));
            }
            if !r.block_excess_pass || !r.within_upper_bound {
                bad.push("chain summary fails".into());
            }
        }
        Err(e) => bad.push(format!("chain refused: {e}")),
    }
    bad
}

fn criterion4() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    for seed in 0..500u64 {
        let n = 5 + (seed % 36) as usize;
        let h = random_bc4free(n, usize::MAX, seed).map_err(|e| e.to_string())?;
        let bad = claim_violations(&h);
        ensure(bad.is_empty(), || format!("random n={n} seed={seed}: {}", bad.join("; ")))?;
        instances += 1;
    }
    for q in QS {
        let h = lower_bound_construction(q).map_err(|e| e.to_string())?;
        let bad = claim_violations(&h);
        ensure(bad.is_empty(), || format!("construction q={q}: {}", bad.join("; ")))?;
        instances += 1;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 600.0, || format!("took {secs:.1} s"))?;
    Ok(format!("{instances} instances, zero violations, {secs:.1} s"))
}

fn random_hypergraph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut edges: Vec<[Vertex; 3]> = Vec::new();
    let m = m.min(n * (n - 1) * (n - 2) / 6);
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

fn criterion5() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut with_cycle = 0;
    for i in 0..200 {
        let n = rng.gen_range(4..=12);
        let m = rng.gen_range(1..=20);
        let h = random_hypergraph(n, m, &mut rng);
        let fast = find_berge_cycle(&h, 4).map_err(|e| e.to_string())?.is_some();
        let slow = naive_has_bc4(&h);
        ensure(fast == slow, || format!("instance {i} disagrees: {h}"))?;
        with_cycle += fast as usize;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs <= 120.0, || format!("took {secs:.1} s"))?;
    ensure(with_cycle > 0 && with_cycle < 200, || "instances do not cover both answers".into())?;
    Ok(format!("200 instances agree ({with_cycle} contain a Berge C4), {secs:.1} s"))
}

fn criterion6() -> Outcome {
    let mut graphs = 0u64;
    for n in 0..=6usize {
        let pairs: Vec<(Vertex, Vertex)> =
            (0..n as Vertex).flat_map(|x| (x + 1..n as Vertex).map(move |y| (x, y))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = ShadowGraph::from_pairs(
                n,
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p),
            )
            .map_err(|e| e.to_string())?;
            ensure(count_3paths(&g) == brute_3paths(&g), || format!("mismatch on {n} vertices, mask {mask}"))?;
            graphs += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 7..=8usize {
        let pairs: Vec<(Vertex, Vertex)> =
            (0..n as Vertex).flat_map(|x| (x + 1..n as Vertex).map(move |y| (x, y))).collect();
        for _ in 0..5000 {
            let p: f64 = rng.gen();
            let chosen: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
            let g = ShadowGraph::from_pairs(n, chosen).map_err(|e| e.to_string())?;
            ensure(count_3paths(&g) == brute_3paths(&g), || format!("mismatch on {n} vertices"))?;
            graphs += 1;
        }
    }
    // census asserts the same identity internally on every run
    for seed in 0..50 {
        census(&random_bc4free(12, usize::MAX, seed).map_err(|e| e.to_string())?);
    }
    Ok(format!("{graphs} graphs on at most 8 vertices"))
}

fn criterion7() -> Outcome {
    let h = Hypergraph::new(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3]]).map_err(|e| e.to_string())?;
    let g = shadow(&h);
    ensure(g.edge_count() == 6, || "shadow is not K4".into())?;
    let ex = degrees(&h).total_excess();
    ensure(ex == 3, || format!("sum of excess degrees {ex}"))?;
    let d = decompose(&h);
    ensure(d.len() == 1 && d.blocks[0].kind == BlockKind::Type2, || "expected one TYPE2 block".into())?;
    let c = census(&h);
    let tuple = (c.total_3paths, c.good_3paths, c.nongood_3paths, c.rare_4cycles);
    ensure(tuple == (12, 3, 9, 0), || format!("census {tuple:?}"))?;
    ensure(c.claim1.value == 1, || format!("claim1 max {}", c.claim1.value))?;
    let r = verify_chain(&h).map_err(|e| e.to_string())?;
    let eq1 = r.get("eq1").ok_or("no eq1")?;
    let sides = (eq1.lhs.to_string(), eq1.rhs.to_string());
    ensure(sides == ("12".into(), "75".into()), || format!("eq1 sides {sides:?}"))?;
    Ok("shadow K4, excess 3, one TYPE2 block, census (12, 3, 9, 0), eq1 (12, 75)".into())
}

fn run_cli(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_berge")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn criterion8() -> Outcome {
    let dir = std::env::temp_dir().join(format!("berge-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let write = |name: &str, h: &Hypergraph| -> Result<PathBuf, String> {
        let p = dir.join(name);
        std::fs::write(&p, h.to_string()).map_err(|e| e.to_string())?;
        Ok(p)
    };
    let free = write("free.txt", &lower_bound_construction(3).map_err(|e| e.to_string())?)?;
    let k4 = Hypergraph::new(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).map_err(|e| e.to_string())?;
    let cyclic = write("k4.txt", &k4)?;
    let (free, cyclic) = (free.to_str().unwrap(), cyclic.to_str().unwrap());

    let commands: Vec<Vec<&str>> = vec![
        vec!["shadow", free],
        vec!["check", free],
        vec!["check", cyclic],
        vec!["blocks", free],
        vec!["census", free],
        vec!["census", cyclic, "--rare-rule", "any-edges"],
        vec!["verify", free],
        vec!["verify", cyclic],
        vec!["construct", "--q", "4"],
        vec!["random", "--n", "20", "--m", "40", "--seed", "9"],
        vec!["search", "--n-max", "7", "--threads", "2"],
    ];
    for args in &commands {
        let first = run_cli(args)?;
        let second = run_cli(args)?;
        ensure(first == second, || format!("`berge {}` differs between runs", args.join(" ")))?;
    }
    let _ = std::fs::remove_dir_all(&dir);

    let searches: Vec<_> = [1, 2, 8]
        .iter()
        .map(|&threads| branch_and_bound_ex(8, SearchOptions { node_budget: 10_000_000, threads }))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    ensure(searches.iter().all(|s| s.same_outcome(&searches[0])), || "search differs across thread counts".into())?;
    let (one, eight) = (
        run_cli(&["search", "--n-max", "8", "--threads", "1"])?,
        run_cli(&["search", "--n-max", "8", "--threads", "8"])?,
    );
    ensure(one == eight, || "search output differs between 1 and 8 threads".into())?;
    Ok(format!("{} commands byte-identical; search identical on 1, 2, 8 threads", commands.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("exact extremal table", criterion1),
        ("upper-bound dominance", criterion2),
        ("construction verification", criterion3),
        ("claim property suite", criterion4),
        ("detector oracle equivalence", criterion5),
        ("counting identity", criterion6),
        ("worked micro-examples", criterion7),
        ("determinism", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
