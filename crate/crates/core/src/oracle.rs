//! The hidden orientation and the counting probe oracle that guards it.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;
use crate::orientation::topological_order;

/// Acyclic orientation of every edge of a comparison graph.
#[derive(Clone, Debug)]
pub struct GroundTruth {
    n: usize,
    /// `succ[u]` holds `v` iff `{u, v}` is an edge oriented `u -> v`.
    succ: Vec<FixedBitSet>,
    rank: Option<Vec<usize>>,
}

impl GroundTruth {
    /// Orientation induced by a total order. `order[i]` is the vertex of rank `i`.
    pub fn from_order(g: &ComparisonGraph, order: &[usize]) -> Result<Self> {
        let n = g.n();
        if order.len() != n {
            return Err(Error::InvalidParameter(format!(
                "order lists {} vertices, graph has {n}",
                order.len()
            )));
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            g.check_vertex(v)?;
            if rank[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} appears twice in the order"
                )));
            }
            rank[v] = i;
        }
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in g.edges() {
            if rank[u] < rank[v] {
                succ[u].insert(v);
            } else {
                succ[v].insert(u);
            }
        }
        Ok(Self {
            n,
            succ,
            rank: Some(rank),
        })
    }

    /// Orientation given edge by edge. Every edge of `g` must appear exactly
    /// once and the result must be acyclic.
    pub fn from_directed_edges(g: &ComparisonGraph, edges: &[(usize, usize)]) -> Result<Self> {
        let n = g.n();
        let mut succ = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::ForbiddenPair { u, v });
            }
            if succ[u].contains(v) || succ[v].contains(u) {
                return Err(Error::InvalidParameter(format!(
                    "edge {{{u}, {v}}} oriented twice"
                )));
            }
            succ[u].insert(v);
        }
        if edges.len() != g.m() {
            return Err(Error::InvalidParameter(format!(
                "{} of {} edges oriented",
                edges.len(),
                g.m()
            )));
        }
        let truth = Self {
            n,
            succ,
            rank: None,
        };
        if !truth.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(truth)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `Some(true)` if `u -> v`, `Some(false)` if `v -> u`, `None` if the
    /// pair is not an edge.
    #[inline]
    pub fn precedes(&self, u: usize, v: usize) -> Option<bool> {
        if self.succ[u].contains(v) {
            Some(true)
        } else if self.succ[v].contains(u) {
            Some(false)
        } else {
            None
        }
    }

    /// Rank of each vertex when the orientation came from a total order.
    pub fn rank(&self) -> Option<&[usize]> {
        self.rank.as_deref()
    }

    /// Directed edges `(u, v)`, sorted lexicographically.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.succ[u].ones().map(move |v| (u, v)))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        let out: Vec<Vec<usize>> = self.succ.iter().map(|s| s.ones().collect()).collect();
        topological_order(&out).is_some()
    }
}

/// Counting, memoizing gateway to a [`GroundTruth`].
///
/// Repeat probes of an edge, in either direction, are answered from the cache
/// and do not count.
#[derive(Clone, Debug)]
pub struct ProbeOracle {
    truth: GroundTruth,
    probes: u64,
    seen: FixedBitSet,
}

impl ProbeOracle {
    pub fn new(truth: GroundTruth) -> Self {
        let n = truth.n;
        Self {
            truth,
            probes: 0,
            seen: FixedBitSet::with_capacity(n * n),
        }
    }

    /// Returns `true` iff `u` precedes `v`.
    pub fn probe(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.truth.n;
        for w in [u, v] {
            if w >= n {
                return Err(Error::InvalidVertex { vertex: w, n });
            }
        }
        let answer = self
            .truth
            .precedes(u, v)
            .ok_or(Error::ForbiddenPair { u, v })?;
        let key = u.min(v) * n + u.max(v);
        if !self.seen.put(key) {
            self.probes += 1;
        }
        Ok(answer)
    }

    /// Number of distinct edges probed so far.
    pub fn probe_count(&self) -> u64 {
        self.probes
    }

    /// The cached answer for `u` vs `v`, if that edge was probed.
    pub fn cached(&self, u: usize, v: usize) -> Option<bool> {
        let n = self.truth.n;
        if u >= n || v >= n || !self.seen.contains(u.min(v) * n + u.max(v)) {
            return None;
        }
        self.truth.precedes(u, v)
    }

    pub fn truth(&self) -> &GroundTruth {
        &self.truth
    }
}
