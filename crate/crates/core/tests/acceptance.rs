//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use probesort::analysis::{greedy_coloring, max_clique_exact, EXACT_CLIQUE_LIMIT};
use probesort::cliquesolve::{clique_solve_with, direct_edges_budget};
use probesort::colorsolve::{add_edges, color_solve_with};
use probesort::harness::{bench, brute_force_solve, gen_er, grid, summarize, Algo, Model};
use probesort::trace::Trace;
use probesort::{forbidden_graph, ComparisonGraph, GroundTruth, ProbeOracle, ScaffoldGraph};

const GRID_N: [usize; 4] = [8, 16, 32, 64];
const GRID_P: [f64; 6] = [0.1, 0.3, 0.5, 0.7, 0.9, 1.0];
const GRID_SEEDS: u64 = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn ceil_log2(n: usize) -> u64 {
    if n <= 1 {
        0
    } else {
        (usize::BITS - (n - 1).leading_zeros()) as u64
    }
}

/// Traces from both solvers over the small grid, shared by criteria 1-5.
#[derive(Default)]
struct GridRun {
    instances: usize,
    color_mismatches: Vec<String>,
    clique_mismatches: Vec<String>,
    add_edges_calls: usize,
    add_edges_violations: Vec<String>,
    total_violations: Vec<String>,
    selects: usize,
    select_violations: Vec<String>,
    pivots: usize,
    pivot_probe_violations: Vec<String>,
    k_raises: usize,
    direct_calls: usize,
    direct_violations: Vec<String>,
}

fn run_grid() -> GridRun {
    let mut run = GridRun::default();
    for &n in &GRID_N {
        for &p in &GRID_P {
            for seed in 0..GRID_SEEDS {
                let tag = format!("n={n} p={p} seed={seed}");
                let inst = gen_er(n, p, seed).expect("valid grid instance");
                let g = &inst.graph;
                run.instances += 1;

                let mut brute_oracle = inst.oracle();
                let brute = brute_force_solve(&mut brute_oracle, g)
                    .unwrap()
                    .directed_edges();

                let h = forbidden_graph(g);
                let coloring = greedy_coloring(&h, seed);
                let mut oracle = inst.oracle();
                let mut trace = Trace::default();
                match color_solve_with(&mut oracle, g, &coloring, &mut trace) {
                    Ok(out) if out.orientation.directed_edges() == brute => {}
                    Ok(_) => run.color_mismatches.push(tag.clone()),
                    Err(e) => run.color_mismatches.push(format!("{tag}: {e}")),
                }
                for ev in &trace.add_edges {
                    run.add_edges_calls += 1;
                    if ev.probes > (ev.len_i + ev.len_j) as u64 {
                        run.add_edges_violations.push(format!(
                            "{tag} ({},{}) probes={} lens={}+{}",
                            ev.i, ev.j, ev.probes, ev.len_i, ev.len_j
                        ));
                    }
                }
                let k = coloring.k() as u64;
                let n64 = n as u64;
                let limit = n64 * ceil_log2(n) + 2 * n64 * k;
                if oracle.probe_count() > limit {
                    run.total_violations.push(format!(
                        "{tag} probes={} limit={limit}",
                        oracle.probe_count()
                    ));
                }

                let omega = max_clique_exact(&h, EXACT_CLIQUE_LIMIT).unwrap();
                let k = (omega + 1).max(2);
                let mut oracle = inst.oracle();
                let mut trace = Trace::default();
                match clique_solve_with(&mut oracle, g, k, &mut trace) {
                    Ok(out) if out.orientation.directed_edges() == brute => {}
                    Ok(_) => run.clique_mismatches.push(tag.clone()),
                    Err(e) => run.clique_mismatches.push(format!("{tag}: {e}")),
                }
                run.k_raises += trace.k_raises.len();
                for ev in &trace.selects {
                    run.selects += 1;
                    let need = ev.n_sub.div_ceil(3 * ev.k);
                    let ok =
                        2 * ev.survivors > ev.n_sub && ev.min_recorded.is_some_and(|m| m >= need);
                    if !ok {
                        run.select_violations.push(format!("{tag} {ev:?}"));
                    }
                }
                for ev in &trace.pivots {
                    run.pivots += 1;
                    if ev.probes_before != ev.probes_after {
                        run.pivot_probe_violations.push(format!("{tag} {ev:?}"));
                    }
                }
                for ev in &trace.direct_edges {
                    run.direct_calls += 1;
                    let budget = direct_edges_budget(ev.s_len, ev.k);
                    if ev.probes > budget {
                        run.direct_violations.push(format!(
                            "{tag} vertex={} probes={} budget={budget}",
                            ev.vertex, ev.probes
                        ));
                    }
                }
            }
        }
    }
    run
}

fn first(v: &[String]) -> String {
    v.first()
        .map(|s| format!("; first: {s}"))
        .unwrap_or_default()
}

fn criterion_1(run: &GridRun) -> Outcome {
    let pass = run.color_mismatches.is_empty() && run.clique_mismatches.is_empty();
    Outcome::new(
        pass,
        format!(
            "{} instances, colorsolve mismatches={}, cliquesolve mismatches={}{}{}",
            run.instances,
            run.color_mismatches.len(),
            run.clique_mismatches.len(),
            first(&run.color_mismatches),
            first(&run.clique_mismatches),
        ),
    )
}

fn criterion_2(run: &GridRun) -> Outcome {
    Outcome::new(
        run.add_edges_calls > 0 && run.add_edges_violations.is_empty(),
        format!(
            "{} add_edges calls, violations={}{}",
            run.add_edges_calls,
            run.add_edges_violations.len(),
            first(&run.add_edges_violations)
        ),
    )
}

fn criterion_3(run: &GridRun) -> Outcome {
    Outcome::new(
        run.total_violations.is_empty(),
        format!(
            "{} instances, violations={}{}",
            run.instances,
            run.total_violations.len(),
            first(&run.total_violations)
        ),
    )
}

fn criterion_4(run: &GridRun) -> Outcome {
    let pass = run.selects > 0
        && run.pivots > 0
        && run.select_violations.is_empty()
        && run.pivot_probe_violations.is_empty();
    Outcome::new(
        pass,
        format!(
            "{} select calls, {} pivot calls, postcondition violations={}, probing calls={}, k retries={}{}{}",
            run.selects,
            run.pivots,
            run.select_violations.len(),
            run.pivot_probe_violations.len(),
            run.k_raises,
            first(&run.select_violations),
            first(&run.pivot_probe_violations),
        ),
    )
}

fn criterion_5(run: &GridRun) -> Outcome {
    Outcome::new(
        run.direct_calls > 0 && run.direct_violations.is_empty(),
        format!(
            "{} direct_edges calls, violations={}{}",
            run.direct_calls,
            run.direct_violations.len(),
            first(&run.direct_violations)
        ),
    )
}

fn criterion_6() -> Outcome {
    let seeds: Vec<u64> = (0..10).collect();
    let records = bench(&grid(
        Model::Er,
        &[128, 256, 512],
        &[0.5],
        &[Algo::CliqueSolve],
        &seeds,
    ));
    let summaries = summarize(&records);
    let ratios: Vec<f64> = summaries.iter().map(|s| s.per_n_log2sq).collect();
    let all_correct = summaries.iter().all(|s| s.all_correct);
    let hi = ratios.iter().cloned().fold(f64::MIN, f64::max);
    let lo = ratios.iter().cloned().fold(f64::MAX, f64::min);
    let spread = hi / lo;
    let cells: Vec<String> = summaries
        .iter()
        .map(|s| {
            format!(
                "n={}: mean={:.1} norm={:.4}",
                s.n, s.mean_probes, s.per_n_log2sq
            )
        })
        .collect();
    Outcome::new(
        all_correct && ratios.len() == 3 && spread < 2.0,
        format!(
            "{}; spread={spread:.3} (< 2), all correct={all_correct}",
            cells.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let n = 256usize;
    let ps = [0.02, 0.05, 0.1, 0.2, 0.4, 0.8];
    let seeds: Vec<u64> = (0..10).collect();
    let records = bench(&grid(Model::Er, &[n], &ps, &[Algo::Hybrid], &seeds));
    let nf = n as f64;
    let scale = nf.powf(1.5) * nf.ln();
    let envelope = 2.0 * scale;
    let over: Vec<String> = records
        .iter()
        .filter(|r| r.probes as f64 > envelope || !r.correct)
        .map(|r| {
            format!(
                "p={} seed={} probes={} correct={}",
                r.p, r.seed, r.probes, r.correct
            )
        })
        .collect();
    let fitted = records
        .iter()
        .map(|r| r.probes as f64 / scale)
        .fold(0.0, f64::max);
    Outcome::new(
        records.len() == 60 && over.is_empty(),
        format!(
            "{} runs, envelope={envelope:.0}, fitted constant max probes/(n^1.5 ln n)={fitted:.4}, failures={}{}",
            records.len(),
            over.len(),
            first(&over)
        ),
    )
}

fn criterion_8() -> Outcome {
    // v1..v4 are ids 0..3 with v1 < v2 < v3 < v4.
    let g = ComparisonGraph::complete(4);
    let truth = GroundTruth::from_order(&g, &[0, 1, 2, 3]).unwrap();
    let (a, b) = ([0, 2], [1, 3]);

    let mut oracle = ProbeOracle::new(truth.clone());
    let mut scaffold = ScaffoldGraph::new(4);
    add_edges(&mut oracle, &g, &a, &b, &mut scaffold).unwrap();
    let ij_probes = oracle.probe_count();
    let mut ij_edges: Vec<_> = scaffold.edges().collect();
    ij_edges.sort_unstable();

    let mut oracle = ProbeOracle::new(truth.clone());
    let mut scaffold = ScaffoldGraph::new(4);
    add_edges(&mut oracle, &g, &b, &a, &mut scaffold).unwrap();
    let mut ji_edges: Vec<_> = scaffold.edges().collect();
    ji_edges.sort_unstable();

    // Every added edge must agree with the brute-force orientation.
    let brute = brute_force_solve(&mut ProbeOracle::new(truth), &g).unwrap();
    let sound = ij_edges
        .iter()
        .chain(&ji_edges)
        .all(|&(u, v)| brute.precedes(u, v) == Some(true));

    let pass = ij_probes == 3 && ij_edges == [(1, 2)] && ji_edges == [(0, 1), (2, 3)] && sound;
    Outcome::new(
        pass,
        format!("(i,j): probes={ij_probes} edges={ij_edges:?}; (j,i): edges={ji_edges:?}; sound={sound}"),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let run = run_grid();
    let grid_time = started.elapsed();

    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        (
            "1 oracle equivalence on the small grid",
            Box::new(|| criterion_1(&run)),
        ),
        (
            "2 add_edges per-call probe bound",
            Box::new(|| criterion_2(&run)),
        ),
        (
            "3 colorsolve total probe bound",
            Box::new(|| criterion_3(&run)),
        ),
        (
            "4 select/pivot postconditions",
            Box::new(|| criterion_4(&run)),
        ),
        (
            "5 direct_edges per-call probe bound",
            Box::new(|| criterion_5(&run)),
        ),
        ("6 dense-regime n log^2 n scaling", Box::new(criterion_6)),
        ("7 hybrid n^1.5 ln n envelope", Box::new(criterion_7)),
        ("8 add_edges worked example", Box::new(criterion_8)),
    ];

    println!("grid run: {:.1}s", grid_time.as_secs_f64());
    let mut failed = 0;
    for (name, check) in &criteria {
        let t = Instant::now();
        let outcome = check();
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "{} criterion {name} ({:.1}s): {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            t.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
