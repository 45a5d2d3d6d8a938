//! Acceptance suite. One PASS/FAIL line per criterion; exits non-zero if any fail.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spanner_augment::generators::{
    cages, gen_girth_lowerbound, gen_random, gen_setcover_gadget, RandomMetric,
};
use spanner_augment::greedy::{
    greedy_t_spanner, search, AugmentationResult, BicriteriaParams, Halt,
};
use spanner_augment::metric::{apsp, incremental_update, MetricGraph};
use spanner_augment::oracle::{
    brute_force_optimum, check_girth_lemma, verify_main_lemma, LemmaOutcome, OptimalSolution,
};
use spanner_augment::setcover::{cover_threshold, setcover_search};

const DELTA: f64 = 0.1;

struct Outcome {
    ok: bool,
    summary: String,
    /// Extra indented lines.
    notes: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>) -> Self {
        Outcome {
            ok,
            summary: summary.into(),
            notes: Vec::new(),
        }
    }
}

/// Random instance whose optimum with `k` edges is finite.
fn sample(rng: &mut ChaCha8Rng, n: usize, k: usize) -> MetricGraph {
    loop {
        let kind = if rng.gen_bool(0.5) {
            RandomMetric::Euclidean
        } else {
            RandomMetric::HostGraph
        };
        let g = gen_random(n, rng.gen_range(0.0..0.5), kind, rng.gen()).unwrap();
        if g.component_count() <= k + 1 {
            return g;
        }
    }
}

/// Every uncapped halt in a search: the final level and each probe that stayed under the cap.
fn halts_sound(g: &MetricGraph, res: &AugmentationResult) -> Result<usize, String> {
    let mut checked = 0;
    let mut levels: Vec<f64> = res
        .probes
        .iter()
        .filter(|p| !p.exceeds)
        .map(|p| p.t)
        .collect();
    levels.push(res.t_level);
    for t in levels {
        let trace = greedy_t_spanner(g, t, Some(res.params.edge_cap));
        if trace.halted != Halt::Complete {
            return Err(format!("probe at t = {t} no longer halts under the cap"));
        }
        let d = g.with_edges(&trace.edges()).dilation().dilation;
        if d > t * (1.0 + 1e-9) {
            return Err(format!("greedy halted at t = {t} with dilation {d}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Criteria 1 and 2 (suite 1).
fn bicriteria(halts: &mut (usize, Vec<String>)) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst_ratio: f64 = 0.0;
    let mut worst_fill: f64 = 0.0;
    let mut failures = Vec::new();
    let count = 200;
    for i in 0..count {
        let n = rng.gen_range(6..=10);
        let k = rng.gen_range(1..=3);
        let r = if rng.gen_bool(0.5) { 1.0 } else { 2.0 };
        let g = sample(&mut rng, n, k);
        let params = BicriteriaParams::new(r, k, DELTA).unwrap();
        let opt = brute_force_optimum(&g, k).unwrap();
        let res = match search(&g, &params) {
            Ok(res) => res,
            Err(e) => {
                failures.push(format!("instance {i}: search failed: {e}"));
                continue;
            }
        };
        let bound = (1.0 + DELTA) * 2.0 * r * opt.t_star + 1e-6;
        let d = g.with_edges(&res.added).dilation().dilation;
        worst_ratio = worst_ratio.max(d / bound);
        worst_fill = worst_fill.max(res.added.len() as f64 / params.edge_cap as f64);
        if res.added.len() > params.edge_cap || d > bound {
            failures.push(format!(
                "instance {i} (n={n}, k={k}, r={r}): |S| = {} cap {}, dilation {d} bound {bound}",
                res.added.len(),
                params.edge_cap
            ));
        }
        match halts_sound(&g, &res) {
            Ok(c) => halts.0 += c,
            Err(e) => halts.1.push(format!("suite 1 instance {i}: {e}")),
        }
    }
    let mut out = Outcome::new(
        failures.is_empty(),
        format!(
            "{count} instances; max dilation/((1+δ)·2r·t*+1e-6) = {worst_ratio:.4}, max |S|/floor(fk) = {worst_fill:.3}"
        ),
    );
    out.notes = failures;
    out
}

fn girth_lemma() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (seed, (n, r)) in [(20, 2), (30, 2), (50, 3)].into_iter().enumerate() {
        match check_girth_lemma(n, r, 100, seed as u64) {
            Ok(rep) => parts.push(format!(
                "(n={n}, r={r}, m={}) max girth {} ≤ {}",
                rep.edges,
                rep.max_girth.map_or("∞".into(), |g| g.to_string()),
                rep.bound
            )),
            Err(e) => {
                ok = false;
                parts.push(format!("(n={n}, r={r}) {e}"));
            }
        }
    }
    Outcome::new(ok, format!("100 graphs each: {}", parts.join("; ")))
}

fn main_lemma() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut verified = 0;
    let mut via_missing = 0;
    let mut failures = Vec::new();
    let mut tried = 0;
    while verified + via_missing < 60 && tried < 5000 {
        tried += 1;
        let n = rng.gen_range(6..=10);
        let k = rng.gen_range(1..=2);
        let r = if rng.gen_bool(0.5) { 1.0 } else { 2.0 };
        let g = sample(&mut rng, n, k);
        let params = BicriteriaParams::new(r, k, DELTA).unwrap();
        let Ok(res) = search(&g, &params) else {
            continue;
        };
        let Some(t) = res.t_bracket else { continue };
        let opt = brute_force_optimum(&g, k).unwrap();
        let trace = greedy_t_spanner(&g, t, Some(params.edge_cap));
        match verify_main_lemma(&g, &opt, &trace, params.edge_cap) {
            Ok((h, rep)) => {
                let girth_ok = h.girth().is_none_or(|c| c as f64 <= 2.0 * r);
                let within_g = t <= params.g * opt.t_star * (1.0 + 1e-9);
                match rep.outcome {
                    LemmaOutcome::Verified if girth_ok && within_g => verified += 1,
                    LemmaOutcome::NoCycle if !rep.missing.is_empty() && within_g => {
                        via_missing += 1
                    }
                    other => failures.push(format!(
                        "n={n} k={k} r={r}: outcome {other:?}, girth {:?}, t = {t}, g·t* = {}",
                        h.girth(),
                        params.g * opt.t_star
                    )),
                }
            }
            Err(e) => failures.push(format!("n={n} k={k} r={r}: {e}")),
        }
    }
    let random_ok = failures.is_empty() && verified + via_missing >= 50;

    let inst = gen_girth_lowerbound(&cages::k33(), 1).unwrap();
    let opt = OptimalSolution::from_reference(&inst.graph, inst.spine.clone()).unwrap();
    let params = BicriteriaParams::new(1.0, inst.k, DELTA)
        .unwrap()
        .with_sparsity(inst.sparsity)
        .unwrap();
    let k33 = search(&inst.graph, &params).ok().and_then(|res| {
        let t = res.t_bracket?;
        let trace = greedy_t_spanner(&inst.graph, t, Some(params.edge_cap));
        verify_main_lemma(&inst.graph, &opt, &trace, params.edge_cap).ok()
    });
    let k33_ok = matches!(&k33, Some((_, rep)) if rep.outcome == LemmaOutcome::Verified);
    let k33_desc = match &k33 {
        Some((h, rep)) => format!(
            "K33 instance {:?}, |I| = {:?}, t = {:.3} ≤ |I|·t' = {:.3}",
            rep.outcome,
            h.girth(),
            rep.t,
            h.girth().unwrap_or(0) as f64 * rep.t_star
        ),
        None => "K33 instance failed".into(),
    };
    let mut out = Outcome::new(
        random_ok && k33_ok,
        format!(
            "{} random instances ({verified} via a girth-graph cycle, {via_missing} via routes avoiding S*); {k33_desc}",
            verified + via_missing
        ),
    );
    out.notes = failures;
    out
}

/// Criterion 5 with the suite-5 halts for criterion 2.
fn lower_bound(halts: &mut (usize, Vec<String>)) -> Outcome {
    let inst = gen_girth_lowerbound(&cages::k33(), 1).unwrap();
    let m = inst.rungs.len();
    let t = 2.0 * inst.t_upper;
    let trace = greedy_t_spanner(&inst.graph, t, None);
    let first: Vec<_> = trace.edges().into_iter().take(m - 1).collect();
    let all_rungs = first.len() == m - 1 && first.iter().all(|e| inst.rungs.contains(e));

    let params = BicriteriaParams::new(1.0, inst.k, DELTA)
        .unwrap()
        .with_sparsity(inst.sparsity)
        .unwrap();
    let (gap_ok, desc) = match search(&inst.graph, &params) {
        Ok(res) => {
            match halts_sound(&inst.graph, &res) {
                Ok(c) => halts.0 += c,
                Err(e) => halts.1.push(format!("suite 5: {e}")),
            }
            let t_found = res.t_bracket.unwrap_or(res.t_level);
            (
                t_found > inst.t_upper,
                format!(
                    "search t = {t_found:.3} (next level {:.3}, achieved {:.3}) vs t_ub = {:.3}",
                    res.t_level, res.t_achieved, inst.t_upper
                ),
            )
        }
        Err(e) => (false, format!("search failed: {e}")),
    };
    Outcome::new(
        all_rungs && gap_ok && params.edge_cap == m - 1,
        format!(
            "K33, t = 2·t_ub = {t:.1}: first {} additions in M3: {all_rungs}; cap {}; {desc}",
            m - 1,
            params.edge_cap
        ),
    )
}

fn gadget() -> Outcome {
    let eps = 0.25;
    let yes_bound = 4.0 / eps + 1.0;
    let no_floor = 8.0 / eps;
    let two_sets = |k| gen_setcover_gadget(3, &[vec![0], vec![1, 2]], k, eps).unwrap();
    let mut out = Outcome::new(true, "");

    // as stated: {e1},{e2,e3} with one set allowed
    let g = two_sets(1);
    let literal = brute_force_optimum(&g.graph, 1).unwrap();
    let literal_ok = literal.t_star <= yes_bound + 1e-9;
    out.notes.push(format!(
        "[{}] {{e1}},{{e2,e3}}, k = 1: t* = {:.4} ≤ {yes_bound} (the system needs two sets, so this is a NO-instance)",
        if literal_ok { "PASS" } else { "FAIL" },
        literal.t_star
    ));

    let mut yes_ok = true;
    for (name, inst) in [
        ("{e1},{e2,e3}, k = 2", two_sets(2)),
        (
            "one element, one set, k = 1",
            gen_setcover_gadget(1, &[vec![0]], 1, eps).unwrap(),
        ),
    ] {
        let opt = brute_force_optimum(&inst.graph, inst.k).unwrap();
        let ok = opt.t_star <= yes_bound + 1e-9;
        yes_ok &= ok;
        out.notes.push(format!(
            "[{}] YES {name}: t* = {:.4} ≤ {yes_bound}",
            if ok { "PASS" } else { "FAIL" },
            opt.t_star
        ));
    }

    let mut no_ok = true;
    for (name, inst) in [
        ("{e1},{e2,e3}, k = 1", two_sets(1)),
        (
            "{e1,e2},{e2,e3}, k = 1",
            gen_setcover_gadget(3, &[vec![0, 1], vec![1, 2]], 1, eps).unwrap(),
        ),
    ] {
        let best = inst
            .graph
            .absent_edges()
            .into_iter()
            .map(|e| inst.graph.with_edges(&[e]).dilation().dilation)
            .fold(f64::INFINITY, f64::min);
        let ok = best >= no_floor - 1e-9;
        no_ok &= ok;
        out.notes.push(format!(
            "[{}] NO {name}: best single-edge dilation {best:.4} ≥ {no_floor}",
            if ok { "PASS" } else { "FAIL" }
        ));
    }
    out.ok = literal_ok && yes_ok && no_ok;
    out.summary = format!("ε = {eps}: literal {{e1}},{{e2,e3}} k = 1 bound {literal_ok}, YES bounds {yes_ok}, NO bounds {no_ok}");
    out
}

fn set_cover() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    let mut max_size = 0;
    let mut failures = Vec::new();
    let count = 100;
    for i in 0..count {
        let n = rng.gen_range(6..=8);
        let k = rng.gen_range(1..=2);
        let g = sample(&mut rng, n, k);
        let opt = brute_force_optimum(&g, k).unwrap();
        let threshold = cover_threshold(k, n);
        match setcover_search(&g, k, DELTA) {
            Ok(res) => {
                let d = g.with_edges(&res.added).dilation().dilation;
                let bound = (1.0 + DELTA) * opt.t_star + 1e-6;
                worst = worst.max(d / bound);
                max_size = max_size.max(res.added.len());
                if d > bound || res.added.len() as f64 > threshold {
                    failures.push(format!(
                        "instance {i} (n={n}, k={k}): dilation {d} bound {bound}, |S| = {} T = {threshold}",
                        res.added.len()
                    ));
                }
            }
            Err(e) => failures.push(format!("instance {i}: {e}")),
        }
    }
    let mut out = Outcome::new(
        failures.is_empty(),
        format!(
            "{count} instances; max dilation/((1+δ)t*+1e-6) = {worst:.4}, largest |S| = {max_size}"
        ),
    );
    out.notes = failures;
    out
}

fn incremental() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    let count = 1000;
    for _ in 0..count {
        let n = rng.gen_range(3..=12);
        let kind = if rng.gen_bool(0.5) {
            RandomMetric::Euclidean
        } else {
            RandomMetric::HostGraph
        };
        let g = gen_random(n, rng.gen_range(0.0..0.4), kind, rng.gen()).unwrap();
        let mut absent = g.absent_edges();
        let steps = rng.gen_range(1..=8).min(absent.len());
        let mut d = apsp(&g);
        let mut h = g.clone();
        for _ in 0..steps {
            let e = absent.swap_remove(rng.gen_range(0..absent.len()));
            d = incremental_update(&d, e, g.weight(e));
            h = h.with_edges(&[e]);
            let full = apsp(&h);
            for u in 0..n {
                for v in 0..n {
                    let (a, b) = (d.get(u, v), full.get(u, v));
                    let err = if a == b {
                        0.0
                    } else {
                        (a - b).abs() / a.abs().max(b.abs())
                    };
                    worst = worst.max(err);
                }
            }
        }
    }
    Outcome::new(
        worst <= 1e-12,
        format!("{count} sequences; max relative error {worst:.3e} (tol 1e-12)"),
    )
}

fn main() {
    let mut all_ok = true;
    let mut halts = (0usize, Vec::new());
    let mut report = |id: &str, title: &str, f: &mut dyn FnMut() -> Outcome| {
        let started = Instant::now();
        let out = f();
        println!(
            "criterion {id} [{}] {title}: {} ({:.1}s)",
            if out.ok { "PASS" } else { "FAIL" },
            out.summary,
            started.elapsed().as_secs_f64()
        );
        for note in out.notes.iter().take(20) {
            println!("    {note}");
        }
        all_ok &= out.ok;
    };

    report("1", "bicriteria guarantee", &mut || bicriteria(&mut halts));
    report("3", "girth lemma", &mut girth_lemma);
    report("4", "main-lemma verification", &mut main_lemma);
    report("5", "lower-bound instance", &mut || lower_bound(&mut halts));
    report("2", "greedy halt soundness (suites 1 and 5)", &mut || {
        let mut out = Outcome::new(
            halts.1.is_empty(),
            format!("{} uncapped halts rechecked", halts.0),
        );
        out.notes = halts.1.clone();
        out
    });
    report("6", "set-cover gadget bounds", &mut gadget);
    report("7", "set-cover algorithm", &mut set_cover);
    report("8", "incremental distances", &mut incremental);

    if !all_ok {
        std::process::exit(1);
    }
}
