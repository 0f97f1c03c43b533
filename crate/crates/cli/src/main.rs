mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Result};
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use nonrep_core::bounds::{certify_delta_inequalities, eval_bound, BoundName, Optimizer, SeriesBound};
use nonrep_core::coloring::{count_colorings, count_violations};
use nonrep_core::graph::{families, PathBoundFormula};
use nonrep_core::lemma::{sweep, ClaimFamily, Instance};
use nonrep_core::repetition::path_colors;
use nonrep_core::resample::Outcome;
use nonrep_core::{
    check_growth, find_violating_path, resample_color, ElementId, GeneralizedGraph, ListAssignment, PathKind, Regime,
};

use input::{load_coloring, load_graph, load_lists};

/// Verification, exact counting and bounds for non-repetitive colorings.
#[derive(Parser)]
#[command(name = "nonrep", version)]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for parallel counting and sweeps.
    #[arg(long, global = true, env = "NONREP_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ListArgs {
    /// Every colored element gets the palette 0..k.
    #[arg(long)]
    uniform: Option<u32>,
    /// List assignment JSON file.
    #[arg(long)]
    lists: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring and report a shortest violating path.
    Verify {
        #[arg(long)]
        regime: Regime,
        #[arg(long)]
        coloring: String,
        graph: String,
    },
    /// Count valid list colorings exactly.
    Count {
        #[arg(long)]
        regime: Regime,
        #[command(flatten)]
        lists: ListArgs,
        graph: String,
    },
    /// Count (coloring, color) pairs that become invalid when the element is added.
    Violations {
        #[arg(long)]
        regime: Regime,
        #[arg(long)]
        element: ElementId,
        #[command(flatten)]
        lists: ListArgs,
        graph: String,
    },
    /// Compare C(G) with growth * C(G - x) for a built-in claim.
    Ratio {
        #[arg(long)]
        claim: ClaimFamily,
        #[arg(long, default_value_t = 2)]
        delta: u32,
        #[arg(long)]
        element: ElementId,
        #[command(flatten)]
        lists: ListArgs,
        graph: String,
    },
    /// Enumerate paths of length 2i through an element and compare with the degree bounds.
    Paths {
        #[arg(long)]
        kind: PathKind,
        #[arg(long)]
        element: ElementId,
        /// Half-length i; paths have 2i elements.
        #[arg(long)]
        half: u32,
        /// Include the paths themselves.
        #[arg(long)]
        list: bool,
        graph: String,
    },
    /// Evaluate closed-form bounds.
    Bounds {
        #[arg(long, requires = "delta")]
        name: Option<BoundName>,
        #[arg(long)]
        delta: Option<u64>,
        /// CSV of every bound for delta in DMIN..=DMAX.
        #[arg(long, num_args = 2, value_names = ["DMIN", "DMAX"])]
        table: Option<Vec<u64>>,
        /// Same as the optimize subcommand.
        #[arg(long, value_name = "PRESET")]
        optimize: Option<String>,
    },
    /// Minimize alpha + S(alpha) for a preset series: path, weak-total, thue-choice:D.
    Optimize {
        preset: String,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Check the numeric inequalities behind the 4.25 delta bound.
    Certify {
        #[arg(long, required = true)]
        delta: Vec<u64>,
    },
    /// Randomized coloring by resampling squares.
    Color {
        #[arg(long)]
        regime: Regime,
        /// Uniform palette size.
        #[arg(long)]
        colors: Option<u32>,
        #[arg(long)]
        lists: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100_000)]
        max_steps: u64,
        graph: String,
    },
    /// Sweep the built-in corpus against the desk-scale claims.
    Corpus {
        /// Restrict to one claim.
        #[arg(long)]
        claim: Option<ClaimFamily>,
    },
}

enum Output {
    Json(Value),
    Text(String),
}

struct Reply {
    output: Output,
    violation: bool,
}

fn ok(v: impl Serialize) -> Result<Reply> {
    Ok(Reply { output: Output::Json(serde_json::to_value(v)?), violation: false })
}

fn flagged(v: impl Serialize, violation: bool) -> Result<Reply> {
    Ok(Reply { output: Output::Json(serde_json::to_value(v)?), violation })
}

/// Integral values print without a fraction.
fn number(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 9.0e15 {
        json!(x as i64)
    } else {
        json!(x)
    }
}

fn round6(x: f64) -> f64 {
    (x * 1e6).round() / 1e6
}

fn preset(name: &str) -> Result<SeriesBound> {
    if let Some(d) = name.strip_prefix("thue-choice:") {
        let d: u32 = d.parse().map_err(|_| anyhow!("bad delta in preset `{name}`"))?;
        if d < 2 {
            bail!("thue-choice preset needs delta >= 2");
        }
        return Ok(SeriesBound::thue_choice(d));
    }
    SeriesBound::preset(name).ok_or_else(|| anyhow!("unknown preset `{name}`; try path, weak-total, thue-choice:D"))
}

fn optimize(name: &str, tol: f64) -> Result<Reply> {
    let o = Optimizer::with_tol(tol).minimize(&preset(name)?)?;
    ok(json!({ "alpha": round6(o.alpha), "gamma": round6(o.gamma) }))
}

fn bounds_table(lo: u64, hi: u64) -> Result<Reply> {
    if lo == 0 || lo > hi {
        bail!("table range must satisfy 1 <= DMIN <= DMAX");
    }
    let mut out = String::from("delta");
    for b in BoundName::ALL {
        out.push(',');
        out.push_str(b.as_str());
    }
    out.push('\n');
    for d in lo..=hi {
        out.push_str(&d.to_string());
        for b in BoundName::ALL {
            out.push(',');
            if let Ok(v) = eval_bound(b, d) {
                out.push_str(&number(v).to_string());
            }
        }
        out.push('\n');
    }
    Ok(Reply { output: Output::Text(out), violation: false })
}

fn builtin_corpus(family: ClaimFamily) -> Vec<Instance> {
    let Ok(claim) = family.at(2) else { return Vec::new() };
    let union = |a: GeneralizedGraph, b: GeneralizedGraph| families::disjoint_union(&a, &b);
    let graphs: Vec<(String, GeneralizedGraph)> = match family {
        ClaimFamily::Path => (1..=9).map(|n| (format!("P{n}"), families::path(n))).collect(),
        ClaimFamily::ThueChoice => (3..=6)
            .map(|n| (format!("C{n}"), families::cycle(n)))
            .chain((1..=6).map(|n| (format!("P{n}"), families::path(n))))
            .collect(),
        ClaimFamily::WeakTotal => vec![
            ("P1".into(), families::path(1)),
            ("P2".into(), families::path(2)),
            ("P3".into(), families::path(3)),
            ("C3".into(), families::cycle(3)),
            ("P2+P1".into(), union(families::path(2), families::path(1))),
        ],
        ClaimFamily::Total => vec![
            ("P1".into(), families::path(1)),
            ("P2".into(), families::path(2)),
            ("P1+P1".into(), union(families::path(1), families::path(1))),
        ],
        ClaimFamily::ImprovedWeakTotalVertex | ClaimFamily::ImprovedWeakTotalEdge => Vec::new(),
    };
    let mut out = Vec::new();
    for (name, g) in graphs {
        let lists = ListAssignment::uniform(&g, claim.list_size as u32);
        let elements: Vec<ElementId> = match family {
            ClaimFamily::Path => g.vertices().last().map(ElementId::vertex).into_iter().collect(),
            _ => claim.regime.relevant_elements(&g).into_iter().filter(|x| claim.element_kind.admits(x.kind)).collect(),
        };
        for element in elements {
            out.push(Instance { name: name.clone(), graph: g.clone(), lists: lists.clone(), element });
        }
    }
    out
}

fn corpus(only: Option<ClaimFamily>) -> Result<Reply> {
    let mut claims = Vec::new();
    let mut failed = false;
    for family in ClaimFamily::ALL {
        if only.is_some_and(|f| f != family) {
            continue;
        }
        if !family.desk_scale() {
            claims.push(json!({ "claim": family.to_string(), "desk_scale": false }));
            continue;
        }
        let claim = family.at(2)?;
        let summary = sweep(&builtin_corpus(family), &claim)?;
        failed |= !summary.all_hold();
        let records: Vec<Value> = summary
            .records
            .iter()
            .map(|r| {
                json!({
                    "graph": r.name,
                    "element": r.report.element.to_string(),
                    "C_G": r.report.count,
                    "C_Gminus": r.report.count_without,
                    "ratio": r.report.ratio,
                    "bound": claim.growth,
                    "holds": r.report.holds,
                    "tight": r.report.tight,
                })
            })
            .collect();
        claims.push(json!({
            "claim": family.to_string(),
            "list_size": claim.list_size,
            "growth": claim.growth,
            "instances": summary.instances,
            "min_ratio": summary.min_ratio,
            "tight": summary.tight,
            "failures": summary.failures.len(),
            "records": records,
        }));
    }
    flagged(json!({ "claims": claims }), failed)
}

fn run(cmd: Command) -> Result<Reply> {
    match cmd {
        Command::Verify { regime, coloring, graph } => {
            let g = load_graph(&graph)?;
            let c = load_coloring(&coloring)?;
            if let Some(x) = regime.relevant_elements(&g).into_iter().find(|&x| c.get(x).is_none()) {
                bail!("element {x} is not colored");
            }
            match find_violating_path(&g, &c, regime, None) {
                None => ok(json!({ "valid": true })),
                Some(p) => {
                    let colors = path_colors(&p, &c);
                    flagged(json!({ "valid": false, "path": p, "colors": colors }), true)
                }
            }
        }
        Command::Count { regime, lists, graph } => {
            let g = load_graph(&graph)?;
            let l = load_lists(&g, lists.uniform, lists.lists.as_deref())?;
            ok(count_colorings(&g, &l, regime, None)?)
        }
        Command::Violations { regime, element, lists, graph } => {
            let g = load_graph(&graph)?;
            let l = load_lists(&g, lists.uniform, lists.lists.as_deref())?;
            let f = count_violations(&g, &l, regime, element)?;
            ok(json!({ "element": element.to_string(), "violations": f }))
        }
        Command::Ratio { claim, delta, element, lists, graph } => {
            let c = claim.at(delta)?;
            let g = load_graph(&graph)?;
            let uniform = match (&lists.uniform, &lists.lists) {
                (None, None) => Some(c.list_size as u32),
                (u, _) => *u,
            };
            let l = load_lists(&g, uniform, lists.lists.as_deref())?;
            let r = check_growth(&g, &l, &c, element)?;
            let holds = r.holds;
            flagged(
                json!({
                    "claim": claim.to_string(),
                    "delta": delta,
                    "element": element.to_string(),
                    "C_G": r.count,
                    "C_Gminus": r.count_without,
                    "ratio": r.ratio,
                    "bound": c.growth,
                    "rhs_bound": r.rhs_bound,
                    "holds": holds,
                    "tight": r.tight,
                }),
                !holds,
            )
        }
        Command::Paths { kind, element, half, list, graph } => {
            if half == 0 {
                bail!("--half must be positive");
            }
            let g = load_graph(&graph)?;
            if !g.contains(element) {
                bail!("unknown element {element}");
            }
            let paths = g.enumerate_paths_through(element, kind, 2 * half as usize);
            let delta = g.max_degree() as u32;
            let mut exceeded = false;
            let bounds: Vec<Value> = PathBoundFormula::applicable(element.kind, kind)
                .map(|f| {
                    let b = f.eval(delta, half);
                    let holds = BigUint::from(paths.len()) <= b;
                    exceeded |= !holds;
                    json!({ "formula": f, "bound": b.to_string(), "holds": holds })
                })
                .collect();
            let mut out = json!({
                "element": element.to_string(),
                "kind": kind,
                "length": 2 * half,
                "delta": delta,
                "count": paths.len(),
                "bounds": bounds,
            });
            if list {
                out["paths"] = json!(paths.iter().map(ToString::to_string).collect::<Vec<_>>());
            }
            flagged(out, exceeded)
        }
        Command::Bounds { name, delta, table, optimize: preset_name } => match (name, delta, table, preset_name) {
            (Some(n), Some(d), None, None) => {
                Ok(Reply { output: Output::Json(number(eval_bound(n, d)?)), violation: false })
            }
            (None, None, Some(t), None) => bounds_table(t[0], t[1]),
            (None, None, None, Some(p)) => optimize(&p, 1e-9),
            _ => bail!("use exactly one of --name/--delta, --table or --optimize"),
        },
        Command::Optimize { preset, tol } => optimize(&preset, tol),
        Command::Certify { delta } => {
            if delta.contains(&0) {
                bail!("delta must be positive");
            }
            let certs: Vec<_> = delta.iter().map(|&d| certify_delta_inequalities(d)).collect();
            let failed = certs.iter().any(|c| !c.holds);
            if certs.len() == 1 {
                flagged(certs[0], failed)
            } else {
                flagged(&certs, failed)
            }
        }
        Command::Color { regime, colors, lists, seed, max_steps, graph } => {
            let g = load_graph(&graph)?;
            let l = load_lists(&g, colors, lists.as_deref())?;
            let run = resample_color(&g, &l, regime, seed, max_steps)?;
            let mut out = json!({
                "outcome": match run.outcome { Outcome::Success { .. } => "success", Outcome::Exhausted => "exhausted" },
                "steps": run.steps_used,
                "seed": run.seed,
                "max_steps": run.max_steps,
                "rng": run.rng,
            });
            if let Some(c) = run.coloring() {
                out["coloring"] = serde_json::to_value(c)?;
            }
            ok(out)
        }
        Command::Corpus { claim } => corpus(claim),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(reply) => {
            let text = match reply.output {
                Output::Text(t) => t,
                Output::Json(v) => {
                    let s = if cli.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
                    s.expect("values serialize") + "\n"
                }
            };
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(u8::from(reply.violation))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
