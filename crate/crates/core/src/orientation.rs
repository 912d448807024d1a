//! Discovered edge directions, the scaffold DAG, and orientation checks.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;

/// Directions learned so far, one entry per unordered pair.
///
/// Stored densely as two `n * n` bitsets keyed by `(min, max)`: whether the
/// pair is known, and whether it points from the smaller id to the larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientationStore {
    n: usize,
    known: FixedBitSet,
    low_first: FixedBitSet,
    len: usize,
}

impl OrientationStore {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            known: FixedBitSet::with_capacity(n * n),
            low_first: FixedBitSet::with_capacity(n * n),
            len: 0,
        }
    }

    /// Builds a store from directed pairs `(u, v)` meaning `u -> v`.
    pub fn from_directed_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut store = Self::new(n);
        for (u, v) in edges {
            store.record(u, v)?;
        }
        Ok(store)
    }

    #[inline]
    fn key(&self, u: usize, v: usize) -> usize {
        u.min(v) * self.n + u.max(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of oriented pairs.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Records `u -> v`. Re-recording the same direction is a no-op; the
    /// opposite direction is an error.
    pub fn record(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::Internal(format!("cannot orient self-pair {u}")));
        }
        let key = self.key(u, v);
        if self.known.put(key) {
            if self.low_first.contains(key) != (u < v) {
                return Err(Error::Internal(format!(
                    "conflicting directions recorded for {{{u}, {v}}}"
                )));
            }
            return Ok(());
        }
        self.low_first.set(key, u < v);
        self.len += 1;
        Ok(())
    }

    /// Records the outcome of comparing `u` and `v`: `u -> v` if
    /// `u_first`, otherwise `v -> u`.
    pub fn record_outcome(&mut self, u: usize, v: usize, u_first: bool) -> Result<()> {
        if u_first {
            self.record(u, v)
        } else {
            self.record(v, u)
        }
    }

    /// `Some(true)` if `u -> v` is known, `Some(false)` if `v -> u` is known.
    #[inline]
    pub fn precedes(&self, u: usize, v: usize) -> Option<bool> {
        if u >= self.n || v >= self.n || u == v {
            return None;
        }
        let key = self.key(u, v);
        if !self.known.contains(key) {
            return None;
        }
        Some(self.low_first.contains(key) == (u < v))
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.precedes(u, v).is_some()
    }

    /// True iff every edge of `g` between members of `vertices` is oriented.
    pub fn knows_all_within(&self, g: &ComparisonGraph, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| {
            vertices[i + 1..]
                .iter()
                .all(|&v| !g.has_edge(u, v) || self.contains(u, v))
        })
    }

    /// Directed pairs `(u, v)` meaning `u -> v`, sorted lexicographically.
    pub fn directed_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .known
            .ones()
            .map(|key| {
                let (lo, hi) = (key / self.n, key % self.n);
                if self.low_first.contains(key) {
                    (lo, hi)
                } else {
                    (hi, lo)
                }
            })
            .collect();
        edges.sort_unstable();
        edges
    }
}

/// The sparse DAG whose transitive closure determines every orientation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ScaffoldGraph {
    out: Vec<Vec<usize>>,
    edges: usize,
}

impl ScaffoldGraph {
    pub fn new(n: usize) -> Self {
        Self {
            out: vec![Vec::new(); n],
            edges: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut a = Self::new(n);
        for (u, v) in edges {
            a.add_edge(u, v);
        }
        a
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.out[u].push(v);
        self.edges += 1;
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn successors(&self, u: usize) -> &[usize] {
        &self.out[u]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Depth-first search for a directed path `u -> ... -> v`.
    /// A vertex reaches itself.
    pub fn reachable(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n());
        let mut stack = vec![u];
        seen.insert(u);
        while let Some(x) = stack.pop() {
            for &y in &self.out[x] {
                if y == v {
                    return true;
                }
                if !seen.put(y) {
                    stack.push(y);
                }
            }
        }
        false
    }

    /// Reflexive transitive closure as one bitset row per vertex.
    pub fn closure(&self) -> Result<Vec<FixedBitSet>> {
        let n = self.n();
        let order = topological_order(&self.out).ok_or(Error::Cyclic)?;
        let mut reach = vec![FixedBitSet::with_capacity(n); n];
        for &u in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(u);
            for &v in &self.out[u] {
                row.union_with(&reach[v]);
            }
            reach[u] = row;
        }
        Ok(reach)
    }
}

/// Free-function form of [`ScaffoldGraph::reachable`].
pub fn reachable(a: &ScaffoldGraph, u: usize, v: usize) -> bool {
    a.reachable(u, v)
}

/// Kahn's algorithm over successor lists. `None` if there is a cycle.
pub fn topological_order(out: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = out.len();
    let mut indeg = vec![0usize; n];
    for vs in out {
        for &v in vs {
            indeg[v] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    /// Every edge of the graph has a direction.
    pub complete: bool,
    /// The oriented pairs form a DAG.
    pub acyclic: bool,
    /// Edges of the graph with no direction.
    pub missing: Vec<(usize, usize)>,
    /// Oriented pairs that are not edges of the graph.
    pub extraneous: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.complete && self.acyclic && self.extraneous.is_empty()
    }
}

pub fn validate_orientation(g: &ComparisonGraph, o: &OrientationStore) -> ValidationReport {
    let missing: Vec<_> = g.edges().filter(|&(u, v)| !o.contains(u, v)).collect();
    let directed = o.directed_edges();
    let extraneous: Vec<_> = directed
        .iter()
        .copied()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let mut out = vec![Vec::new(); o.n()];
    for &(u, v) in &directed {
        out[u].push(v);
    }
    ValidationReport {
        complete: missing.is_empty(),
        acyclic: topological_order(&out).is_some(),
        missing,
        extraneous,
    }
}
