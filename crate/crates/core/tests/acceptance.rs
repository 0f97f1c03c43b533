//! Acceptance suite: one printed PASS/FAIL line per criterion, nonzero exit
//! if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nonrep_core::bounds::{certify_delta_inequalities, geometric_sums_exact, optimize, root_cubic, SeriesBound};
use nonrep_core::coloring::{count_colorings, count_violations, prefix_counts};
use nonrep_core::graph::{count_paths_bound, families, PathBoundFormula};
use nonrep_core::lemma::{check_growth, ClaimFamily};
use nonrep_core::repetition::find_square;
use nonrep_core::{
    resample_color, BigCount, Color, ElementId, GeneralizedGraph, ListAssignment, PathKind, Regime,
};

use common::{brute_square_free, brute_thue_number_of_path, Incidence};

struct Verdict {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Verdict {
    Verdict { ok, detail: detail.into() }
}

fn run(results: &mut Vec<bool>, id: u32, title: &str, limit: Duration, f: impl FnOnce() -> Verdict) {
    let start = Instant::now();
    let v = f();
    let took = start.elapsed();
    let in_time = took <= limit;
    let ok = v.ok && in_time;
    let timing = if in_time { String::new() } else { format!(" exceeded limit {limit:?}") };
    println!(
        "criterion {id:>2} [{title}]: {} ({took:.2?}{timing}) {}",
        if ok { "PASS" } else { "FAIL" },
        v.detail
    );
    results.push(ok);
}

fn uniform_count(g: &GeneralizedGraph, k: u32, regime: Regime) -> BigCount {
    count_colorings(g, &ListAssignment::uniform(g, k), regime, None).unwrap()
}

fn c1() -> Verdict {
    let words = [("hotshots", true), ("repetitive", true), ("alfalfa", true), ("total", false), ("minimize", false)];
    let start = Instant::now();
    let got: Vec<bool> = words.iter().map(|(w, _)| find_square(w.as_bytes()).is_some()).collect();
    let took = start.elapsed();
    let ok = words.iter().zip(&got).all(|((_, want), g)| want == g)
        && words.iter().all(|(w, want)| brute_square_free(w.as_bytes()) != *want)
        && took < Duration::from_millis(1);
    verdict(ok, format!("classification {got:?}, classify time {took:.2?}"))
}

fn c2() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for n in 1..=9usize {
        let shorter = families::path(n);
        let longer = families::path(n + 1);
        let c_n = uniform_count(&shorter, 4, Regime::VertexThue);
        let c_next = uniform_count(&longer, 4, Regime::VertexThue);
        let f = count_violations(&longer, &ListAssignment::uniform(&longer, 4), Regime::VertexThue, ElementId::vertex(n))
            .unwrap();
        let identity = c_next.clone() + f.clone() == &c_n * 4;
        let growth = c_next.0 >= &c_n.0 * 2u32;
        ok &= identity && growth;
        lines.push(format!("C{}={c_next}", n + 1));
    }
    verdict(ok, lines.join(" "))
}

fn c3() -> Verdict {
    let g = families::path(8);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut min_ratio = f64::INFINITY;
    let mut ok = true;
    for _ in 0..100 {
        let mut lists = ListAssignment::default();
        for v in 0..8 {
            let colors = rand::seq::index::sample(&mut rng, 8, 4).into_iter().map(|c| Color(c as u32));
            lists.set(ElementId::vertex(v), colors);
        }
        let counts = prefix_counts(&g, &lists, Regime::VertexThue, None).unwrap();
        for w in counts.windows(2) {
            ok &= w[1].0 >= &w[0].0 * 2u32;
            min_ratio = min_ratio.min(w[1].to_f64() / w[0].to_f64());
        }
    }
    verdict(ok, format!("min prefix ratio {min_ratio:.4}"))
}

fn c4() -> Verdict {
    let p4_binary = uniform_count(&families::path(4), 2, Regime::VertexThue);
    let p12_ternary = uniform_count(&families::path(12), 3, Regime::VertexThue);
    let mut numbers = Vec::new();
    let mut ok = p4_binary.is_zero() && !p12_ternary.is_zero();
    for n in 4..=12 {
        let got = nonrep_core::coloring::thue_number(&families::path(n), Regime::VertexThue, 4);
        let oracle = brute_thue_number_of_path(n);
        ok &= got == Some(3) && oracle == 3;
        numbers.push(got.map_or("-".into(), |k| k.to_string()));
    }
    verdict(ok, format!("P4 binary={p4_binary} P12 ternary={p12_ternary} pi(P4..P12)=[{}]", numbers.join(",")))
}

fn c5() -> Verdict {
    let c = uniform_count(&families::path(30), 3, Regime::VertexThue);
    verdict(!c.is_zero(), format!("ternary square-free colorings of P30: {c}"))
}

fn corpus6() -> Vec<(String, GeneralizedGraph)> {
    let mut out = vec![
        ("P6".to_string(), families::path(6)),
        ("C6".to_string(), families::cycle(6)),
        ("K4".to_string(), families::complete(4)),
        ("K5".to_string(), families::complete(5)),
        ("Petersen".to_string(), families::petersen()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for k in 0..20 {
        let n = rng.random_range(3..=10);
        let p = rng.random_range(0.3..0.9);
        out.push((format!("random{k}(n={n})"), families::random_bounded_degree(n, 4, p, &mut rng)));
    }
    out
}

fn c6() -> Verdict {
    let mut checked = 0usize;
    let mut oracle_mismatch = Vec::new();
    let mut exceed = Vec::new();
    let mut grouped: std::collections::BTreeMap<(String, String, u32), (usize, usize, String)> = Default::default();
    for (name, g) in corpus6() {
        let delta = g.max_degree() as u32;
        let inc = Incidence::of(&g);
        for kind in PathKind::ALL {
            for i in 1..=4u32 {
                let len = 2 * i as usize;
                let all = inc.paths(kind, len);
                for x in g.elements().filter(|x| kind.admits(x.kind)) {
                    let got = g.enumerate_paths_through(x, kind, len).len();
                    let oracle = all.iter().filter(|p| p.contains(&x)).count();
                    if got != oracle {
                        oracle_mismatch.push(format!("{name} {x} {kind} 2i={len}: {got} vs {oracle}"));
                    }
                    for f in PathBoundFormula::applicable(x.kind, kind) {
                        checked += 1;
                        let bound = f.eval(delta, i);
                        if num_bigint::BigUint::from(got) > bound {
                            exceed.push(format!("{name} {x} {f:?} i={i}: {got} > {bound}"));
                            let e = grouped.entry((name.clone(), format!("{f:?}"), i)).or_insert((0, 0, bound.to_string()));
                            e.0 += 1;
                            e.1 = e.1.max(got);
                        }
                    }
                    count_paths_bound(delta, x.kind, kind, i).unwrap();
                }
            }
        }
    }
    for m in oracle_mismatch.iter().take(6) {
        println!("    {m}");
    }
    for ((name, f, i), (n, worst, bound)) in &grouped {
        println!("    {name} {f} i={i}: {n} elements exceed, worst {worst} > {bound}");
    }
    verdict(
        oracle_mismatch.is_empty() && exceed.is_empty(),
        format!(
            "{checked} (element, formula, i) checks, {} oracle mismatches, {} bound excesses",
            oracle_mismatch.len(),
            exceed.len()
        ),
    )
}

fn c7() -> Verdict {
    let p = optimize(&SeriesBound::path(), 1e-9).unwrap();
    let w = optimize(&SeriesBound::weak_total(), 1e-9).unwrap();
    let cubic = root_cubic();
    let ok = (p.alpha - 2.0).abs() <= 1e-6
        && (p.gamma - 4.0).abs() <= 1e-6
        && (w.gamma - 5.21914).abs() <= 1e-3
        && (w.gamma - cubic).abs() <= 1e-3;
    verdict(ok, format!("path ({:.8}, {:.8}); weak-total gamma {:.6} vs cubic root {:.6}", p.alpha, p.gamma, w.gamma, cubic))
}

fn c8() -> Verdict {
    let start = Instant::now();
    let third = BigRational::new(BigInt::from(1), BigInt::from(3));
    let (_, weighted) = geometric_sums_exact(&third).unwrap();
    let took = start.elapsed();
    let want = BigRational::new(BigInt::from(9), BigInt::from(4));
    verdict(weighted == want && took < Duration::from_millis(1), format!("sum = {weighted}, time {took:.2?}"))
}

fn c9() -> Verdict {
    let mut ok = true;
    let mut parts = Vec::new();
    for d in [300u64, 301, 1000, 1_000_000] {
        let c = certify_delta_inequalities(d);
        ok &= c.holds;
        parts.push(format!("D={d} margins ({:.5}, {:.6})", c.edge.margin, c.vertex.margin));
    }
    let at100 = certify_delta_inequalities(100);
    ok &= !at100.edge.holds;
    parts.push(format!("D=100 (a) margin {:.5}", at100.edge.margin));
    verdict(ok, parts.join("; "))
}

fn union(parts: &[GeneralizedGraph]) -> GeneralizedGraph {
    parts.iter().fold(GeneralizedGraph::default(), |acc, g| families::disjoint_union(&acc, g))
}

fn growth_family(family: ClaimFamily, corpus: &[(&str, GeneralizedGraph)]) -> (bool, f64, usize) {
    let claim = family.at(2).unwrap();
    let mut ok = true;
    let mut min_ratio = f64::INFINITY;
    let mut n = 0;
    for (_, g) in corpus {
        let lists = ListAssignment::uniform(g, claim.list_size as u32);
        for x in claim.regime.relevant_elements(g) {
            if !claim.element_kind.admits(x.kind) {
                continue;
            }
            let r = check_growth(g, &lists, &claim, x).unwrap();
            n += 1;
            ok &= r.holds;
            if let Some(q) = r.ratio {
                min_ratio = min_ratio.min(q);
            }
        }
    }
    (ok, min_ratio, n)
}

fn c10() -> Verdict {
    let p = families::path;
    let thue: Vec<(&str, GeneralizedGraph)> = vec![
        ("C3", families::cycle(3)),
        ("C4", families::cycle(4)),
        ("C5", families::cycle(5)),
        ("C6", families::cycle(6)),
        ("P3", p(3)),
        ("P4", p(4)),
        ("P5", p(5)),
        ("P6", p(6)),
    ];
    let weak: Vec<(&str, GeneralizedGraph)> = vec![
        ("P1", p(1)),
        ("P2", p(2)),
        ("P3", p(3)),
        ("P4", p(4)),
        ("C3", families::cycle(3)),
        ("P1+P1", union(&[p(1), p(1)])),
        ("P2+P1", union(&[p(2), p(1)])),
        ("P2+P2", union(&[p(2), p(2)])),
        ("P3+P1", union(&[p(3), p(1)])),
        ("P2+P1+P1", union(&[p(2), p(1), p(1)])),
        ("C3+P1", union(&[families::cycle(3), p(1)])),
    ];
    let strong: Vec<(&str, GeneralizedGraph)> = vec![
        ("P1", p(1)),
        ("P2", p(2)),
        ("P3", p(3)),
        ("P1+P1", union(&[p(1), p(1)])),
        ("P2+P1", union(&[p(2), p(1)])),
        ("P2+P1+P1", union(&[p(2), p(1), p(1)])),
    ];
    let (a, ra, na) = growth_family(ClaimFamily::ThueChoice, &thue);
    let (b, rb, nb) = growth_family(ClaimFamily::WeakTotal, &weak);
    let (c, rc, nc) = growth_family(ClaimFamily::Total, &strong);
    let want_total = 4.0 * (1.0 + 2f64.cbrt());
    let ok = a && b && c && ra >= 4.0 && rb >= 6.0 && rc >= want_total;
    verdict(
        ok,
        format!(
            "vertex min ratio {ra:.4} over {na} (>= 4); weak total {rb:.4} over {nb} (>= 6); total {rc:.4} over {nc} (>= {want_total:.4})"
        ),
    )
}

fn c11() -> Verdict {
    let g = families::path(100);
    let lists = ListAssignment::uniform(&g, 4);
    let mut successes = 0;
    let mut revalid = true;
    let mut max_steps = 0;
    for seed in 0..20 {
        let run = resample_color(&g, &lists, Regime::VertexThue, seed, 100_000).unwrap();
        if let Some(c) = run.coloring() {
            successes += 1;
            max_steps = max_steps.max(run.steps_used);
            let word: Vec<Color> = (0..100).map(|v| c.get(ElementId::vertex(v)).unwrap()).collect();
            revalid &= brute_square_free(&word) && c.respects(&lists);
        }
    }
    verdict(successes >= 19 && revalid, format!("{successes}/20 successes, max steps {max_steps}, all re-validated: {revalid}"))
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut r = Vec::new();
    let s = Duration::from_secs;
    run(&mut r, 1, "square oracle", s(1), c1);
    run(&mut r, 2, "path master identity", s(10), c2);
    run(&mut r, 3, "list robustness", s(60), c3);
    run(&mut r, 4, "thue number of paths", s(10), c4);
    run(&mut r, 5, "ternary square-free witness", s(60), c5);
    run(&mut r, 6, "path-count dominance", s(120), c6);
    run(&mut r, 7, "optimizer presets", s(1), c7);
    run(&mut r, 8, "geometric identity", s(1), c8);
    run(&mut r, 9, "delta inequality certificates", s(1), c9);
    run(&mut r, 10, "growth checks at delta 2", s(600), c10);
    run(&mut r, 11, "resampler smoke test", s(60), c11);
    let passed = r.iter().filter(|&&b| b).count();
    println!("acceptance: {passed}/{} criteria passed", r.len());
    if passed != r.len() {
        std::process::exit(1);
    }
}
