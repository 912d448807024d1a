use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::harness::generate::{generate, InstanceSpec, Model};
use crate::harness::solve::{solve, Algo, SolveOptions};
use crate::orientation::validate_orientation;

pub const CSV_HEADER: [&str; 9] = [
    "algo", "n", "p", "seed", "k_used", "probes", "edges", "correct", "wall_ms",
];

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchJob {
    pub spec: InstanceSpec,
    pub algo: Algo,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algo: String,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub k_used: Option<usize>,
    pub probes: u64,
    pub edges: usize,
    pub correct: bool,
    pub wall_ms: f64,
}

/// Jobs for every `n`, `p`, algorithm and seed, in that nesting order.
pub fn grid(
    model: Model,
    ns: &[usize],
    ps: &[f64],
    algos: &[Algo],
    seeds: &[u64],
) -> Vec<BenchJob> {
    let mut jobs = Vec::new();
    for &n in ns {
        for &p in ps {
            for &algo in algos {
                for &seed in seeds {
                    jobs.push(BenchJob {
                        spec: InstanceSpec::new(model, n, p, seed),
                        algo,
                    });
                }
            }
        }
    }
    jobs
}

fn run_job(job: &BenchJob) -> BenchRecord {
    let spec = job.spec;
    let mut record = BenchRecord {
        algo: job.algo.to_string(),
        n: spec.n,
        p: spec.p,
        seed: spec.seed,
        k_used: None,
        probes: 0,
        edges: 0,
        correct: false,
        wall_ms: 0.0,
    };
    let Ok(instance) = generate(&spec) else {
        return record;
    };
    record.edges = instance.graph.m();
    let mut oracle = instance.oracle();
    let opts = SolveOptions {
        p_hint: Some(spec.p),
        ..SolveOptions::default()
    };
    let start = Instant::now();
    let result = solve(job.algo, &mut oracle, &instance.graph, &opts);
    record.wall_ms = (start.elapsed().as_secs_f64() * 1e6).round() / 1e3;
    record.probes = oracle.probe_count();
    if let Ok(report) = result {
        record.k_used = report.k_used;
        record.correct = validate_orientation(&instance.graph, &report.orientation).ok()
            && report.orientation.directed_edges() == instance.truth.directed_edges();
    }
    record
}

/// Runs every job, in parallel, returning records in job order. A failing
/// job yields a record with `correct = false`.
pub fn bench(jobs: &[BenchJob]) -> Vec<BenchRecord> {
    jobs.par_iter().map(run_job).collect()
}

pub fn write_csv<W: Write>(w: W, records: &[BenchRecord]) -> Result<()> {
    let mut out = csv::WriterBuilder::new().has_headers(false).from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in records {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

/// Aggregate over the seeds of one `(algo, n, p)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchSummary {
    pub algo: String,
    pub n: usize,
    pub p: f64,
    pub trials: usize,
    pub all_correct: bool,
    pub mean_probes: f64,
    pub max_probes: u64,
    pub mean_edges: f64,
    /// `mean_probes / (n log2^2 n)`.
    pub per_n_log2sq: f64,
    /// `max_probes / (n^1.5 ln n)`.
    pub per_n15_ln: f64,
}

/// Groups consecutive records sharing `(algo, n, p)`, as produced by [`grid`].
pub fn summarize(records: &[BenchRecord]) -> Vec<BenchSummary> {
    let mut out: Vec<BenchSummary> = Vec::new();
    for chunk in records.chunk_by(|a, b| a.algo == b.algo && a.n == b.n && a.p == b.p) {
        let first = &chunk[0];
        let trials = chunk.len();
        let mean_probes = chunk.iter().map(|r| r.probes as f64).sum::<f64>() / trials as f64;
        let max_probes = chunk.iter().map(|r| r.probes).max().unwrap_or(0);
        let n = first.n as f64;
        let log2 = n.log2();
        out.push(BenchSummary {
            algo: first.algo.clone(),
            n: first.n,
            p: first.p,
            trials,
            all_correct: chunk.iter().all(|r| r.correct),
            mean_probes,
            max_probes,
            mean_edges: chunk.iter().map(|r| r.edges as f64).sum::<f64>() / trials as f64,
            per_n_log2sq: if first.n > 1 {
                mean_probes / (n * log2 * log2)
            } else {
                0.0
            },
            per_n15_ln: if first.n > 1 {
                max_probes as f64 / (n.powf(1.5) * n.ln())
            } else {
                0.0
            },
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_grid_writes_header_only() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &bench(&[])).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "algo,n,p,seed,k_used,probes,edges,correct,wall_ms\n"
        );
    }

    #[test]
    fn grid_cardinality() {
        let jobs = grid(
            Model::Er,
            &[8, 12, 16],
            &[0.5],
            &[Algo::ColorSolve, Algo::CliqueSolve],
            &[1, 2],
        );
        let records = bench(&jobs);
        assert_eq!(records.len(), 12);
        assert!(records.iter().all(|r| r.correct));
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap().lines().count(), 13);
        assert_eq!(summarize(&records).len(), 6);
    }

    #[test]
    fn failures_become_rows() {
        let jobs = grid(Model::NutsBolts, &[7], &[1.0], &[Algo::Brute], &[0]);
        let records = bench(&jobs);
        assert_eq!(records.len(), 1);
        assert!(!records[0].correct);
    }

    #[test]
    fn brute_rows_leave_k_empty() {
        let records = bench(&grid(Model::Er, &[6], &[1.0], &[Algo::Brute], &[4]));
        let mut buf = Vec::new();
        write_csv(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert!(row.starts_with("brute,6,1.0,4,,15,15,true,"), "{row}");
    }
}
