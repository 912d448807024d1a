use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;
use crate::oracle::{GroundTruth, ProbeOracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    /// `G(n, p)`.
    Er,
    /// Complete bipartite graph; the order alternates between the halves.
    NutsBolts,
    /// Hamiltonian path of the hidden order plus each other pair with
    /// probability `p`.
    Stochastic,
    /// Loaded from disk.
    File,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Er => "er",
            Model::NutsBolts => "nutsbolts",
            Model::Stochastic => "stochastic",
            Model::File => "file",
        })
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "er" => Ok(Model::Er),
            "nutsbolts" => Ok(Model::NutsBolts),
            "stochastic" => Ok(Model::Stochastic),
            "file" => Ok(Model::File),
            other => Err(Error::InvalidParameter(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InstanceSpec {
    pub model: Model,
    pub n: usize,
    pub p: f64,
    pub seed: u64,
}

impl InstanceSpec {
    pub fn new(model: Model, n: usize, p: f64, seed: u64) -> Self {
        Self { model, n, p, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidParameter(format!(
                "p = {} outside [0, 1]",
                self.p
            )));
        }
        if self.n == 0 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if self.model == Model::NutsBolts && self.n % 2 == 1 {
            return Err(Error::OddN(self.n));
        }
        Ok(())
    }
}

/// A comparison graph with its hidden orientation.
#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: ComparisonGraph,
    pub truth: GroundTruth,
}

impl Instance {
    /// A fresh oracle with no probes made.
    pub fn oracle(&self) -> ProbeOracle {
        ProbeOracle::new(self.truth.clone())
    }

    /// Vertices from minimum to maximum, when the truth is a total order.
    pub fn order(&self) -> Option<Vec<usize>> {
        self.truth.rank().map(|rank| {
            let mut order = vec![0; rank.len()];
            for (v, &r) in rank.iter().enumerate() {
                order[r] = v;
            }
            order
        })
    }
}

pub fn generate(spec: &InstanceSpec) -> Result<Instance> {
    match spec.model {
        Model::Er => gen_er(spec.n, spec.p, spec.seed),
        Model::NutsBolts => gen_nuts_bolts(spec.n, spec.seed),
        Model::Stochastic => gen_stochastic(spec.n, spec.p, spec.seed),
        Model::File => Err(Error::InvalidParameter(
            "file instances are loaded, not generated".into(),
        )),
    }
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

fn finish(graph: ComparisonGraph, order: &[usize]) -> Result<Instance> {
    let truth = GroundTruth::from_order(&graph, order)?;
    Ok(Instance { graph, truth })
}

/// `G(n, p)` with a uniformly random hidden total order.
pub fn gen_er(n: usize, p: f64, seed: u64) -> Result<Instance> {
    InstanceSpec::new(Model::Er, n, p, seed).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = shuffled(n, &mut rng);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    finish(ComparisonGraph::from_edges(n, edges)?, &order)
}

/// Nuts are `0..n/2`, bolts `n/2..n`; only nut-bolt pairs are comparable.
/// The hidden order is nut, bolt, nut, bolt, ... with random members.
pub fn gen_nuts_bolts(n: usize, seed: u64) -> Result<Instance> {
    InstanceSpec::new(Model::NutsBolts, n, 1.0, seed).validate()?;
    let half = n / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nuts = shuffled(half, &mut rng);
    let bolts: Vec<usize> = shuffled(half, &mut rng)
        .into_iter()
        .map(|b| b + half)
        .collect();
    let order: Vec<usize> = nuts
        .iter()
        .zip(&bolts)
        .flat_map(|(&a, &b)| [a, b])
        .collect();
    let edges = (0..half).flat_map(|u| (half..n).map(move |v| (u, v)));
    finish(ComparisonGraph::from_edges(n, edges)?, &order)
}

/// Consecutive ranks are always comparable; every other pair is with
/// probability `p`.
pub fn gen_stochastic(n: usize, p: f64, seed: u64) -> Result<Instance> {
    InstanceSpec::new(Model::Stochastic, n, p, seed).validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = shuffled(n, &mut rng);
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rank[u].abs_diff(rank[v]) == 1 || rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    finish(ComparisonGraph::from_edges(n, edges)?, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        assert_eq!(gen_er(10, 0.0, 1).unwrap().graph.m(), 0);
        assert_eq!(gen_er(10, 1.0, 1).unwrap().graph.m(), 45);
    }

    #[test]
    fn er_is_deterministic_per_seed() {
        let a = gen_er(30, 0.4, 9).unwrap();
        let b = gen_er(30, 0.4, 9).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.order(), b.order());
        assert_ne!(gen_er(30, 0.4, 10).unwrap().order(), a.order());
    }

    #[test]
    fn spec_validation() {
        assert!(gen_er(5, 1.5, 0).is_err());
        assert!(gen_er(0, 0.5, 0).is_err());
        assert!(matches!(gen_nuts_bolts(7, 0), Err(Error::OddN(7))));
        assert!(generate(&InstanceSpec::new(Model::File, 3, 0.5, 0)).is_err());
    }

    #[test]
    fn nuts_and_bolts_shape() {
        let inst = gen_nuts_bolts(2, 3).unwrap();
        assert_eq!(inst.graph.m(), 1);
        let inst = gen_nuts_bolts(8, 3).unwrap();
        assert_eq!(inst.graph.m(), 16);
        let order = inst.order().unwrap();
        for w in order.windows(2) {
            assert_ne!(w[0] < 4, w[1] < 4);
            assert!(inst.graph.has_edge(w[0], w[1]));
        }
        assert!(order[0] < 4);
    }

    #[test]
    fn stochastic_path_is_present() {
        for p in [0.0, 0.3, 1.0] {
            let inst = gen_stochastic(40, p, 5).unwrap();
            let order = inst.order().unwrap();
            for w in order.windows(2) {
                assert!(inst.graph.has_edge(w[0], w[1]));
            }
            if p == 0.0 {
                assert_eq!(inst.graph.m(), 39);
            } else if p == 1.0 {
                assert_eq!(inst.graph.m(), 780);
            }
        }
    }

    #[test]
    fn model_names_roundtrip() {
        for m in [Model::Er, Model::NutsBolts, Model::Stochastic, Model::File] {
            assert_eq!(m.to_string().parse::<Model>().unwrap(), m);
        }
        assert!("gnp".parse::<Model>().is_err());
    }
}
