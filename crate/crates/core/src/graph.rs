//! Undirected comparison graphs and their complements.
//!
//! Vertices are dense ids `0..n`. Each graph keeps sorted adjacency lists for
//! iteration and one bitset row per vertex for constant-time edge tests.

use std::ops::Deref;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Undirected graph `G` of allowed comparisons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonGraph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
}

impl ComparisonGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_unchecked(u, v);
            }
        }
        g.finish();
        g
    }

    /// Builds a graph from a list of unordered pairs.
    ///
    /// Errors carry the 1-based position of the offending pair in `line`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (i, (u, v)) in edges.into_iter().enumerate() {
            g.try_insert(u, v, i + 1)?;
        }
        g.finish();
        Ok(g)
    }

    pub(crate) fn try_insert(&mut self, u: usize, v: usize, line: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        if self.rows[u].contains(v) {
            return Err(Error::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
    }

    /// Sorts adjacency lists after a batch of insertions.
    pub(crate) fn finish(&mut self) {
        for list in &mut self.adj {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u].contains(v)
    }

    /// Sorted neighbor list of `u`.
    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Complement on the same vertex set.
    pub fn complement(&self) -> Self {
        let mut h = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.rows[u].contains(v) {
                    h.insert_unchecked(u, v);
                }
            }
        }
        h.finish();
        h
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in
    /// the order given.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut sub = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.rows[u].contains(v) {
                    sub.insert_unchecked(a, b);
                }
            }
        }
        sub.finish();
        sub
    }

    /// Checks a vertex id against the vertex count.
    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }
}

/// The forbidden-pair graph `H`, the complement of a [`ComparisonGraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenGraph(ComparisonGraph);

impl ForbiddenGraph {
    /// Wraps an arbitrary graph as `H` directly. Used when `H` is the object
    /// of interest, e.g. in coloring and clique routines.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        ComparisonGraph::from_edges(n, edges).map(ForbiddenGraph)
    }

    /// The comparison graph this is the complement of.
    pub fn comparison_graph(&self) -> ComparisonGraph {
        self.0.complement()
    }
}

impl Deref for ForbiddenGraph {
    type Target = ComparisonGraph;

    fn deref(&self) -> &ComparisonGraph {
        &self.0
    }
}

/// Complement of `g`: the pairs that can never be compared.
pub fn forbidden_graph(g: &ComparisonGraph) -> ForbiddenGraph {
    ForbiddenGraph(g.complement())
}
