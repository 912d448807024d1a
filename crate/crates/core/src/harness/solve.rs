use std::fmt;
use std::str::FromStr;

use crate::analysis::{estimate_k, greedy_coloring};
use crate::cliquesolve::clique_solve_with;
use crate::colorsolve::{color_solve, Coloring};
use crate::error::{Error, Result};
use crate::graph::{forbidden_graph, ComparisonGraph};
use crate::oracle::ProbeOracle;
use crate::orientation::OrientationStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algo {
    ColorSolve,
    CliqueSolve,
    Brute,
    Hybrid,
}

impl Algo {
    pub const ALL: [Algo; 4] = [
        Algo::ColorSolve,
        Algo::CliqueSolve,
        Algo::Brute,
        Algo::Hybrid,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algo::ColorSolve => "colorsolve",
            Algo::CliqueSolve => "cliquesolve",
            Algo::Brute => "brute",
            Algo::Hybrid => "hybrid",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algo::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown algorithm {s:?}")))
    }
}

/// Probes every edge once, in lexicographic order.
pub fn brute_force_solve(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
) -> Result<OrientationStore> {
    let mut out = OrientationStore::new(g.n());
    for (u, v) in g.edges() {
        let u_first = oracle.probe(u, v)?;
        out.record_outcome(u, v, u_first)?;
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HybridBranch {
    Brute,
    Clique,
}

#[derive(Clone, Debug)]
pub struct HybridOutput {
    pub orientation: OrientationStore,
    pub branch: HybridBranch,
    pub k_used: Option<usize>,
}

/// Density below which probing every edge is the cheaper strategy:
/// `scale * ln(n) / sqrt(n)`.
pub fn hybrid_threshold(n: usize, scale: f64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let n = n as f64;
    scale * n.ln() / n.sqrt()
}

/// Brute force on sparse graphs, clique-bounded solving on dense ones.
/// Density is `p_hint` when given, otherwise `m / C(n, 2)`.
pub fn hybrid_solve(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    p_hint: Option<f64>,
) -> Result<HybridOutput> {
    hybrid_solve_with(oracle, g, p_hint, 1.0)
}

pub fn hybrid_solve_with(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    p_hint: Option<f64>,
    threshold_scale: f64,
) -> Result<HybridOutput> {
    let n = g.n();
    let density = p_hint.unwrap_or_else(|| {
        let pairs = n * n.saturating_sub(1) / 2;
        if pairs == 0 {
            0.0
        } else {
            g.m() as f64 / pairs as f64
        }
    });
    if density < hybrid_threshold(n, threshold_scale) {
        Ok(HybridOutput {
            orientation: brute_force_solve(oracle, g)?,
            branch: HybridBranch::Brute,
            k_used: None,
        })
    } else {
        let k = estimate_k(g).k.max(2);
        let out = clique_solve_with(oracle, g, k, &mut ())?;
        Ok(HybridOutput {
            orientation: out.orientation,
            branch: HybridBranch::Clique,
            k_used: Some(out.k_used),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    /// Clique bound; estimated when absent.
    pub k: Option<usize>,
    /// Coloring of `H`; Welsh–Powell when absent.
    pub coloring: Option<Coloring>,
    /// Edge density hint for the hybrid solver.
    pub p_hint: Option<f64>,
    /// Multiplier on the hybrid density threshold.
    pub threshold_scale: f64,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            k: None,
            coloring: None,
            p_hint: None,
            threshold_scale: 1.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub orientation: OrientationStore,
    /// Colors for the coloring solver, final `k` for the clique solver.
    pub k_used: Option<usize>,
}

pub fn solve(
    algo: Algo,
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    opts: &SolveOptions,
) -> Result<SolveReport> {
    match algo {
        Algo::Brute => Ok(SolveReport {
            orientation: brute_force_solve(oracle, g)?,
            k_used: None,
        }),
        Algo::ColorSolve => {
            let coloring = match &opts.coloring {
                Some(c) => c.clone(),
                None => greedy_coloring(&forbidden_graph(g), 0),
            };
            Ok(SolveReport {
                orientation: color_solve(oracle, g, &coloring)?,
                k_used: Some(coloring.k()),
            })
        }
        Algo::CliqueSolve => {
            let k = opts.k.unwrap_or_else(|| estimate_k(g).k.max(2));
            let out = clique_solve_with(oracle, g, k, &mut ())?;
            Ok(SolveReport {
                orientation: out.orientation,
                k_used: Some(out.k_used),
            })
        }
        Algo::Hybrid => {
            let out = hybrid_solve_with(oracle, g, opts.p_hint, opts.threshold_scale)?;
            Ok(SolveReport {
                orientation: out.orientation,
                k_used: out.k_used,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::gen_er;
    use crate::oracle::GroundTruth;

    #[test]
    fn brute_force_counts() {
        let g = ComparisonGraph::empty(4);
        let mut o = ProbeOracle::new(GroundTruth::from_order(&g, &[0, 1, 2, 3]).unwrap());
        assert!(brute_force_solve(&mut o, &g).unwrap().is_empty());
        assert_eq!(o.probe_count(), 0);

        let g = ComparisonGraph::complete(10);
        let order: Vec<usize> = (0..10).rev().collect();
        let mut o = ProbeOracle::new(GroundTruth::from_order(&g, &order).unwrap());
        let out = brute_force_solve(&mut o, &g).unwrap();
        assert_eq!(o.probe_count(), 45);
        assert_eq!(out.directed_edges(), o.truth().directed_edges());
    }

    #[test]
    fn threshold_branches() {
        // ln(100) / 10 = 0.4605...
        assert!((hybrid_threshold(100, 1.0) - 0.460_517).abs() < 1e-6);
        let inst = gen_er(100, 0.5, 1).unwrap();
        let out = hybrid_solve(&mut inst.oracle(), &inst.graph, Some(0.1)).unwrap();
        assert_eq!(out.branch, HybridBranch::Brute);
        let out = hybrid_solve(&mut inst.oracle(), &inst.graph, Some(0.9)).unwrap();
        assert_eq!(out.branch, HybridBranch::Clique);
        // Estimated density ~0.5 is above the threshold.
        let out = hybrid_solve(&mut inst.oracle(), &inst.graph, None).unwrap();
        assert_eq!(out.branch, HybridBranch::Clique);
        let out = hybrid_solve_with(&mut inst.oracle(), &inst.graph, None, 2.0).unwrap();
        assert_eq!(out.branch, HybridBranch::Brute);
    }

    #[test]
    fn algo_names() {
        for a in Algo::ALL {
            assert_eq!(a.name().parse::<Algo>().unwrap(), a);
        }
        assert!("quick".parse::<Algo>().is_err());
    }
}
