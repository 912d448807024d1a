//! Parameters the solvers take as input: a proper coloring of `H` and the
//! bound `k = omega(H) + 1`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colorsolve::Coloring;
use crate::error::{Error, Result};
use crate::graph::{forbidden_graph, ComparisonGraph, ForbiddenGraph};

/// Largest graph [`max_clique_exact`] accepts.
pub const EXACT_CLIQUE_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KMethod {
    /// `k - 1` is the clique number of `H`.
    Exact,
    /// `k - 1` is the size of a greedy independent set of `G`, a lower bound.
    Greedy,
    /// Raised by retries inside the solver.
    Doubling,
}

impl fmt::Display for KMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KMethod::Exact => "exact",
            KMethod::Greedy => "greedy",
            KMethod::Doubling => "doubling",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamEstimate {
    pub k: usize,
    pub method: KMethod,
    /// A clique of `H` with `k - 1` vertices, when one is known.
    pub witness: Option<Vec<usize>>,
}

/// Welsh–Powell: vertices by decreasing degree in `H`, each taking the
/// smallest color unused by its colored `H`-neighbors. Degree ties are broken
/// by a shuffle seeded with `order_seed`.
pub fn greedy_coloring(h: &ForbiddenGraph, order_seed: u64) -> Coloring {
    let n = h.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(order_seed));
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));

    let mut colors = vec![0usize; n];
    let mut used = Vec::new();
    for &v in &order {
        used.clear();
        used.resize(h.degree(v) + 2, false);
        for &w in h.neighbors(v) {
            if colors[w] < used.len() {
                used[colors[w]] = true;
            }
        }
        colors[v] = (1..used.len()).find(|&c| !used[c]).unwrap_or(used.len());
    }
    Coloring::new(colors).expect("greedy colors start at 1")
}

#[inline]
fn bit(v: usize) -> u64 {
    1u64 << v
}

struct CliqueSearch {
    adj: Vec<u64>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch {
    /// Greedy coloring of `cand`; returns vertices with their color numbers,
    /// colors non-decreasing. A color number bounds the clique size reachable
    /// from the candidates up to that point.
    fn color_bound(&self, mut uncolored: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(uncolored.count_ones() as usize);
        let mut color = 0;
        while uncolored != 0 {
            color += 1;
            let mut q = uncolored;
            while q != 0 {
                let v = q.trailing_zeros() as usize;
                q &= !bit(v) & !self.adj[v];
                uncolored &= !bit(v);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut cand: u64) {
        let order = self.color_bound(cand);
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = cand & self.adj[v];
            if next == 0 {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand &= !bit(v);
        }
    }
}

/// A maximum clique of `h`, by branch and bound with greedy-coloring bounds.
pub fn max_clique_witness(h: &ForbiddenGraph, size_limit: usize) -> Result<Vec<usize>> {
    let n = h.n();
    let limit = size_limit.min(EXACT_CLIQUE_LIMIT);
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    let adj = (0..n)
        .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | bit(w)))
        .collect();
    let mut search = CliqueSearch {
        adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    if n > 0 {
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        search.expand(all);
    }
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

/// Clique number of `h`: 0 for no vertices, at least 1 otherwise.
pub fn max_clique_exact(h: &ForbiddenGraph, size_limit: usize) -> Result<usize> {
    max_clique_witness(h, size_limit).map(|c| c.len())
}

/// Maximal independent set of `g` grown by repeatedly taking a vertex of
/// minimum remaining degree (ties to the smaller id).
pub fn greedy_independent_set(g: &ComparisonGraph) -> Vec<usize> {
    let n = g.n();
    let mut removed = vec![false; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut set = Vec::new();
    while let Some(v) = (0..n)
        .filter(|&v| !removed[v])
        .min_by_key(|&v| (degree[v], v))
    {
        set.push(v);
        let mut gone = vec![v];
        gone.extend(g.neighbors(v).iter().copied().filter(|&w| !removed[w]));
        for &x in &gone {
            removed[x] = true;
        }
        for &x in &gone {
            for &y in g.neighbors(x) {
                if !removed[y] {
                    degree[y] -= 1;
                }
            }
        }
    }
    set.sort_unstable();
    set
}

/// `k` for clique-bounded solving. Exact up to [`EXACT_CLIQUE_LIMIT`]
/// vertices; beyond that a greedy independent set gives a lower bound and
/// the solver's retries cover any shortfall.
pub fn estimate_k(g: &ComparisonGraph) -> ParamEstimate {
    if g.n() <= EXACT_CLIQUE_LIMIT {
        let clique = max_clique_witness(&forbidden_graph(g), EXACT_CLIQUE_LIMIT)
            .expect("within the exact limit");
        ParamEstimate {
            k: clique.len() + 1,
            method: KMethod::Exact,
            witness: Some(clique),
        }
    } else {
        let set = greedy_independent_set(g);
        ParamEstimate {
            k: set.len() + 1,
            method: KMethod::Greedy,
            witness: Some(set),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorsolve::validate_coloring;

    fn cycle(n: usize) -> ForbiddenGraph {
        ForbiddenGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn coloring_examples() {
        let empty = ForbiddenGraph::from_edges(4, []).unwrap();
        assert_eq!(greedy_coloring(&empty, 0).k(), 1);
        let tri = ForbiddenGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(greedy_coloring(&tri, 0).k(), 3);
        for seed in 0..10 {
            assert_eq!(greedy_coloring(&cycle(5), seed).k(), 3);
        }
    }

    #[test]
    fn five_cycle_has_no_proper_two_coloring() {
        let h = cycle(5);
        let proper =
            (0u32..32).filter(|mask| h.edges().all(|(u, v)| (mask >> u) & 1 != (mask >> v) & 1));
        assert_eq!(proper.count(), 0);
    }

    #[test]
    fn greedy_coloring_is_valid_input_for_colorsolve() {
        let h = cycle(7);
        let c = greedy_coloring(&h, 3);
        assert!(validate_coloring(&h.comparison_graph(), &c));
    }

    #[test]
    fn clique_examples() {
        assert_eq!(
            max_clique_exact(&ForbiddenGraph::from_edges(0, []).unwrap(), 64).unwrap(),
            0
        );
        assert_eq!(
            max_clique_exact(&ForbiddenGraph::from_edges(5, []).unwrap(), 64).unwrap(),
            1
        );
        let k4 = forbidden_graph(&ComparisonGraph::empty(4));
        assert_eq!(max_clique_exact(&k4, 64).unwrap(), 4);
        assert_eq!(max_clique_exact(&cycle(5), 64).unwrap(), 2);
    }

    #[test]
    fn clique_limit() {
        let h = ForbiddenGraph::from_edges(10, []).unwrap();
        assert!(matches!(
            max_clique_exact(&h, 8),
            Err(Error::TooLarge { n: 10, limit: 8 })
        ));
        let big = ForbiddenGraph::from_edges(65, []).unwrap();
        assert!(matches!(
            max_clique_exact(&big, 1000),
            Err(Error::TooLarge { n: 65, limit: 64 })
        ));
    }

    #[test]
    fn full_width_mask() {
        let h = forbidden_graph(&ComparisonGraph::empty(64));
        assert_eq!(max_clique_exact(&h, 64).unwrap(), 64);
    }

    #[test]
    fn estimate_examples() {
        let est = estimate_k(&ComparisonGraph::complete(6));
        assert_eq!((est.k, est.method), (2, KMethod::Exact));
        let est = estimate_k(&ComparisonGraph::empty(7));
        assert_eq!(est.k, 8);
        let est = estimate_k(&ComparisonGraph::complete(100));
        assert_eq!((est.k, est.method), (2, KMethod::Greedy));
    }

    #[test]
    fn independent_set_is_maximal() {
        let g = ComparisonGraph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let set = greedy_independent_set(&g);
        assert_eq!(set, vec![0, 2, 4]);
        for v in 0..6 {
            let in_set = set.contains(&v);
            let blocked = set.iter().any(|&s| g.has_edge(s, v));
            assert!(in_set || blocked);
            assert!(!(in_set && blocked));
        }
    }
}
