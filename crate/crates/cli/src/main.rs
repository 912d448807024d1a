//! Command-line front end: generate instances, solve them against a probe
//! oracle, verify orientations, and run probe-count sweeps.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use probesort::harness::{self, Algo, InstanceSpec, Model, SolveOptions};
use probesort::{io as formats, ComparisonGraph, GroundTruth, ProbeOracle};

#[derive(Parser)]
#[command(
    name = "probesort",
    version,
    about = "Reconstruct hidden orientations with few probes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance: a graph file and its hidden order.
    Generate {
        #[arg(long, value_parser = parse_model)]
        model: Model,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        order: PathBuf,
    },
    /// Orient a graph by probing the oracle built from an order file.
    Solve {
        #[arg(long, value_parser = parse_algo)]
        algo: Algo,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        /// Clique bound for cliquesolve; estimated when absent.
        #[arg(long)]
        k: Option<usize>,
        /// Coloring of the forbidden graph for colorsolve.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Edge density hint for hybrid.
        #[arg(long)]
        p: Option<f64>,
        /// Multiplier on the hybrid threshold ln(n)/sqrt(n).
        #[arg(long, default_value_t = 1.0)]
        threshold_scale: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check an orientation file against a graph and its hidden order.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        dag: PathBuf,
    },
    /// Sweep generated instances and write one CSV row per run.
    Bench {
        #[arg(long, value_parser = parse_model, default_value = "er")]
        model: Model,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.5")]
        p_list: Vec<f64>,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        /// First seed; trials use consecutive seeds.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// One or more algorithms, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_algo, default_value = "cliquesolve")]
        algo: Vec<Algo>,
        /// Output file; stdout when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: probesort::Error| e.to_string())
}

fn parse_algo(s: &str) -> Result<Algo, String> {
    s.parse().map_err(|e: probesort::Error| e.to_string())
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    Ok(BufReader::new(file))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn read_graph(path: &Path) -> Result<ComparisonGraph> {
    formats::read_graph(open(path)?).with_context(|| format!("reading graph {}", path.display()))
}

fn read_order(path: &Path) -> Result<Vec<usize>> {
    formats::read_order(open(path)?).with_context(|| format!("reading order {}", path.display()))
}

fn generate(spec: InstanceSpec, out: &Path, order_path: &Path) -> Result<()> {
    let instance = harness::generate(&spec)?;
    let mut w = create(out)?;
    writeln!(
        w,
        "# model={} n={} p={} seed={}",
        spec.model, spec.n, spec.p, spec.seed
    )?;
    formats::write_graph(&mut w, &instance.graph)?;
    w.flush()?;
    let order = instance
        .order()
        .context("generated instance has no total order")?;
    let mut w = create(order_path)?;
    formats::write_order(&mut w, &order)?;
    w.flush()?;
    eprintln!("n={} m={}", instance.graph.n(), instance.graph.m());
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Generate {
            model,
            n,
            p,
            seed,
            out,
            order,
        } => {
            generate(InstanceSpec::new(model, n, p, seed), &out, &order)?;
        }
        Command::Solve {
            algo,
            graph,
            order,
            k,
            coloring,
            p,
            threshold_scale,
            out,
        } => {
            let g = read_graph(&graph)?;
            let truth = GroundTruth::from_order(&g, &read_order(&order)?)?;
            let coloring = match coloring {
                Some(path) => Some(
                    formats::read_coloring(open(&path)?)
                        .with_context(|| format!("reading coloring {}", path.display()))?,
                ),
                None => None,
            };
            let opts = SolveOptions {
                k,
                coloring,
                p_hint: p,
                threshold_scale,
            };
            let mut oracle = ProbeOracle::new(truth);
            let report = harness::solve(algo, &mut oracle, &g, &opts)?;
            let mut w = create(&out)?;
            formats::write_orientation(&mut w, &report.orientation)?;
            w.flush()?;
            println!("probes={}", oracle.probe_count());
        }
        Command::Verify { graph, order, dag } => {
            let g = read_graph(&graph)?;
            let order = read_order(&order)?;
            let pairs = formats::read_orientation(open(&dag)?)
                .with_context(|| format!("reading orientation {}", dag.display()))?;
            let report = harness::verify(&g, &order, &pairs)?;
            println!("complete={}", report.complete);
            println!("acyclic={}", report.acyclic);
            println!("agreement={}", report.agreement);
            for (u, v) in &report.flipped {
                println!("flipped {u} {v}");
            }
            for (u, v) in &report.missing {
                println!("missing {u} {v}");
            }
            for (u, v) in &report.extraneous {
                println!("extraneous {u} {v}");
            }
            for (u, v) in &report.duplicates {
                println!("duplicate {u} {v}");
            }
            if !report.ok() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Bench {
            model,
            n_list,
            p_list,
            trials,
            seed,
            algo,
            csv,
        } => {
            if model == Model::File {
                bail!("bench needs a generated model");
            }
            let seeds: Vec<u64> = (seed..seed + trials).collect();
            let jobs = harness::grid(model, &n_list, &p_list, &algo, &seeds);
            let records = harness::bench(&jobs);
            match csv {
                Some(path) => {
                    let mut w = create(&path)?;
                    harness::write_csv(&mut w, &records)?;
                    w.flush()?;
                }
                None => harness::write_csv(io::stdout().lock(), &records)?,
            }
            for s in harness::summarize(&records) {
                eprintln!(
                    "{} n={} p={} trials={} correct={} mean_probes={:.1} max_probes={} \
                     mean_edges={:.1} probes/(n log2^2 n)={:.4} max/(n^1.5 ln n)={:.4}",
                    s.algo,
                    s.n,
                    s.p,
                    s.trials,
                    s.all_correct,
                    s.mean_probes,
                    s.max_probes,
                    s.mean_edges,
                    s.per_n_log2sq,
                    s.per_n15_ln,
                );
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
