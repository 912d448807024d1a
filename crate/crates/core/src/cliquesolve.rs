//! Orientation recovery parameterized by the clique number of the forbidden
//! graph.
//!
//! If every `k` vertices span at least one comparable pair, a set of already
//! oriented vertices always contains a pivot with many known predecessors and
//! successors. Comparing a new vertex with that pivot settles a constant
//! fraction of its edges at once. Vertices are inserted one at a time, for
//! `O(n k log n)` probes overall.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;
use crate::oracle::ProbeOracle;
use crate::orientation::OrientationStore;
use crate::trace::{DirectEdgesEvent, Observer, PivotEvent, SelectEvent};

/// Below or at `PROBE_ALL_FACTOR * k` vertices, every remaining edge is probed
/// directly.
pub const PROBE_ALL_FACTOR: usize = 10;

/// An induced subgraph `G[S]` with its vertices relabelled `0..|S|` in
/// ascending id order.
#[derive(Clone, Debug)]
pub struct Subproblem {
    graph: ComparisonGraph,
    ids: Vec<usize>,
}

impl Subproblem {
    pub fn induced(g: &ComparisonGraph, vertices: &[usize]) -> Self {
        let mut ids = vertices.to_vec();
        ids.sort_unstable();
        ids.dedup();
        Self {
            graph: g.induced(&ids),
            ids,
        }
    }

    pub fn whole(g: &ComparisonGraph) -> Self {
        Self {
            graph: g.clone(),
            ids: (0..g.n()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    /// Original vertex ids, ascending.
    pub fn ids(&self) -> &[usize] {
        &self.ids
    }

    pub fn graph(&self) -> &ComparisonGraph {
        &self.graph
    }
}

/// Known directions inside a subproblem, in local indices.
struct Relation {
    before: Vec<FixedBitSet>,
}

impl Relation {
    fn build(known: &OrientationStore, sub: &Subproblem) -> Result<Self> {
        let n = sub.len();
        let mut before = vec![FixedBitSet::with_capacity(n); n];
        for (a, b) in sub.graph.edges() {
            let (u, v) = (sub.ids[a], sub.ids[b]);
            match known.precedes(u, v) {
                Some(true) => before[a].insert(b),
                Some(false) => before[b].insert(a),
                None => return Err(Error::PreconditionViolated { u, v }),
            }
        }
        Ok(Self { before })
    }

    /// `a` precedes `b`, read backwards when `reversed`. Only meaningful for
    /// adjacent `a`, `b`.
    #[inline]
    fn less(&self, a: usize, b: usize, reversed: bool) -> bool {
        if reversed {
            self.before[b].contains(a)
        } else {
            self.before[a].contains(b)
        }
    }
}

/// Rooted trees over the active vertices of one `select` run. Every link
/// points from a child to a parent that follows it in the order being used.
#[derive(Clone, Debug)]
pub struct TreeForest {
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    alive: FixedBitSet,
    roots: FixedBitSet,
}

impl TreeForest {
    /// `n` singleton trees.
    pub fn new(n: usize) -> Self {
        let mut alive = FixedBitSet::with_capacity(n);
        alive.insert_range(..);
        Self {
            parent: vec![None; n],
            children: vec![Vec::new(); n],
            roots: alive.clone(),
            alive,
        }
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn is_alive(&self, v: usize) -> bool {
        self.alive.contains(v)
    }

    pub fn is_root(&self, v: usize) -> bool {
        self.roots.contains(v)
    }

    pub fn roots(&self) -> Vec<usize> {
        self.roots.ones().collect()
    }

    pub fn alive(&self) -> Vec<usize> {
        self.alive.ones().collect()
    }

    /// Hangs root `child` below root `parent`.
    fn link(&mut self, child: usize, parent: usize) {
        debug_assert!(self.is_root(child) && self.is_root(parent));
        self.parent[child] = Some(parent);
        self.children[parent].push(child);
        self.roots.set(child, false);
    }

    /// Root of each alive vertex's tree; `usize::MAX` for inactive vertices.
    fn root_of_all(&self) -> Vec<usize> {
        let n = self.parent.len();
        let mut root = vec![usize::MAX; n];
        let mut path = Vec::new();
        for v in self.alive.ones() {
            let mut x = v;
            while root[x] == usize::MAX {
                match self.parent[x] {
                    Some(p) => {
                        path.push(x);
                        x = p;
                    }
                    None => {
                        root[x] = x;
                    }
                }
            }
            let r = root[x];
            for y in path.drain(..) {
                root[y] = r;
            }
        }
        root
    }

    /// Deactivates every current root; their children become roots.
    fn delete_roots(&mut self) {
        let roots = self.roots();
        for r in roots {
            self.alive.set(r, false);
            self.roots.set(r, false);
            for c in std::mem::take(&mut self.children[r]) {
                self.parent[c] = None;
                self.roots.insert(c);
            }
        }
    }
}

/// Survivors of a `select` run and the vertices recorded for each.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    /// Surviving vertices `Z`, ascending.
    pub survivors: Vec<usize>,
    /// `recorded[i]` lists the deleted roots recorded for `survivors[i]`:
    /// all successors of it (predecessors for the reversed run).
    pub recorded: Vec<Vec<usize>>,
}

impl Selection {
    pub fn recorded_for(&self, v: usize) -> Option<&[usize]> {
        self.survivors
            .binary_search(&v)
            .ok()
            .map(|i| self.recorded[i].as_slice())
    }

    pub fn as_map(&self) -> BTreeMap<usize, Vec<usize>> {
        self.survivors
            .iter()
            .copied()
            .zip(self.recorded.iter().cloned())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotResult {
    pub pivot: usize,
    /// Known successors of the pivot.
    pub s_plus: Vec<usize>,
    /// Known predecessors of the pivot.
    pub s_minus: Vec<usize>,
}

/// Number of deletion rounds in `select` on `n` vertices.
pub fn select_rounds(n: usize, k: usize) -> usize {
    n.div_ceil(3 * k)
}

fn check_select_input(sub: &Subproblem, k: usize) -> Result<()> {
    if k == 0 || sub.len() <= PROBE_ALL_FACTOR * k {
        return Err(Error::InvalidParameter(format!(
            "select needs more than {PROBE_ALL_FACTOR}k vertices (n = {}, k = {k})",
            sub.len()
        )));
    }
    Ok(())
}

fn run_select<O: Observer + ?Sized>(
    sub: &Subproblem,
    rel: &Relation,
    k: usize,
    reversed: bool,
    obs: &mut O,
) -> Result<Selection> {
    let n = sub.len();
    let rounds = select_rounds(n, k);
    let mut forest = TreeForest::new(n);
    let mut recorded: Vec<Vec<usize>> = vec![Vec::with_capacity(rounds); n];
    let mut max_roots = 0;
    let mut roots_independent = true;

    for _ in 0..rounds {
        // Always merge the lexicographically first adjacent root pair. Roots
        // only disappear during merging, so a root that has run out of larger
        // adjacent roots never gains one again this round.
        for r1 in forest.roots() {
            if !forest.is_root(r1) {
                continue;
            }
            let nbrs = sub.graph.neighbors(r1);
            let mut idx = nbrs.partition_point(|&x| x <= r1);
            while let Some(&r2) = nbrs.get(idx) {
                if !forest.is_root(r2) {
                    idx += 1;
                } else if rel.less(r1, r2, reversed) {
                    forest.link(r1, r2);
                    break;
                } else {
                    forest.link(r2, r1);
                    idx += 1;
                }
            }
        }

        let roots = forest.roots();
        max_roots = max_roots.max(roots.len());
        roots_independent &= roots
            .iter()
            .enumerate()
            .all(|(i, &a)| roots[i + 1..].iter().all(|&b| !sub.graph.has_edge(a, b)));
        if roots.len() >= k {
            return Err(Error::KTooSmall {
                k,
                roots: roots.len(),
            });
        }

        let root_of = forest.root_of_all();
        for v in forest.alive.ones() {
            if root_of[v] != v {
                recorded[v].push(sub.ids[root_of[v]]);
            }
        }
        forest.delete_roots();
    }

    let alive = forest.alive();
    let selection = Selection {
        survivors: alive.iter().map(|&v| sub.ids[v]).collect(),
        recorded: alive
            .iter()
            .map(|&v| std::mem::take(&mut recorded[v]))
            .collect(),
    };
    obs.select(SelectEvent {
        n_sub: n,
        k,
        reversed,
        rounds,
        survivors: selection.survivors.len(),
        min_recorded: selection.recorded.iter().map(Vec::len).min(),
        max_roots,
        roots_independent,
    });
    Ok(selection)
}

/// Finds more than half of the vertices, each with `ceil(n / 3k)` known
/// successors, using only directions already in `known`. Makes no probes.
pub fn select(known: &OrientationStore, g_sub: &Subproblem, k: usize) -> Result<Selection> {
    select_with(known, g_sub, k, &mut ())
}

pub fn select_with<O: Observer + ?Sized>(
    known: &OrientationStore,
    g_sub: &Subproblem,
    k: usize,
    obs: &mut O,
) -> Result<Selection> {
    check_select_input(g_sub, k)?;
    let rel = Relation::build(known, g_sub)?;
    run_select(g_sub, &rel, k, false, obs)
}

/// [`select`] on the reversed order: records known predecessors instead.
pub fn select_reversed(
    known: &OrientationStore,
    g_sub: &Subproblem,
    k: usize,
) -> Result<Selection> {
    select_reversed_with(known, g_sub, k, &mut ())
}

pub fn select_reversed_with<O: Observer + ?Sized>(
    known: &OrientationStore,
    g_sub: &Subproblem,
    k: usize,
    obs: &mut O,
) -> Result<Selection> {
    check_select_input(g_sub, k)?;
    let rel = Relation::build(known, g_sub)?;
    run_select(g_sub, &rel, k, true, obs)
}

/// A vertex with at least `ceil(n / 3k)` known successors and predecessors.
/// Picks the smallest id surviving both selections. Makes no probes.
pub fn pivot(known: &OrientationStore, g_sub: &Subproblem, k: usize) -> Result<PivotResult> {
    pivot_with(known, g_sub, k, &mut ())
}

pub fn pivot_with<O: Observer + ?Sized>(
    known: &OrientationStore,
    g_sub: &Subproblem,
    k: usize,
    obs: &mut O,
) -> Result<PivotResult> {
    check_select_input(g_sub, k)?;
    let rel = Relation::build(known, g_sub)?;
    let up = run_select(g_sub, &rel, k, false, obs)?;
    let down = run_select(g_sub, &rel, k, true, obs)?;
    let pivot = up
        .survivors
        .iter()
        .copied()
        .find(|v| down.survivors.binary_search(v).is_ok())
        .ok_or(Error::EmptyIntersection { n: g_sub.len(), k })?;
    Ok(PivotResult {
        pivot,
        s_plus: up.recorded_for(pivot).unwrap_or_default().to_vec(),
        s_minus: down.recorded_for(pivot).unwrap_or_default().to_vec(),
    })
}

/// Probe budget of one [`direct_edges`] call on `s_len` vertices:
/// `10k + ceil(ln |S| / ln(1 / (1 - 1/(3k)))) + 1`.
pub fn direct_edges_budget(s_len: usize, k: usize) -> u64 {
    let k = k.max(1);
    let shrink = -(1.0 - 1.0 / (3 * k) as f64).ln();
    let log_term = if s_len <= 1 {
        0
    } else {
        ((s_len as f64).ln() / shrink).ceil() as u64
    };
    (PROBE_ALL_FACTOR * k) as u64 + log_term + 1
}

/// Probe budget of [`clique_solve`]: `n` times the budget for `|S| = n`.
pub fn clique_solve_budget(n: usize, k: usize) -> u64 {
    n as u64 * direct_edges_budget(n, k)
}

#[derive(Default)]
struct DirectStats {
    pivot_rounds: usize,
    slow_shrinks: usize,
}

/// Orients every edge between `u` and `s`, given that all edges inside `s`
/// are already in `known`.
pub fn direct_edges(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    u: usize,
    s: &[usize],
    known: &mut OrientationStore,
    k: usize,
) -> Result<()> {
    direct_edges_with(oracle, g, u, s, known, k, &mut ())
}

pub fn direct_edges_with<O: Observer + ?Sized>(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    u: usize,
    s: &[usize],
    known: &mut OrientationStore,
    k: usize,
    obs: &mut O,
) -> Result<()> {
    g.check_vertex(u)?;
    if let Some(&x) = s.iter().find(|&&x| !g.has_edge(u, x)) {
        return Err(Error::ForbiddenPair { u, v: x });
    }
    let start = oracle.probe_count();
    let mut stats = DirectStats::default();
    let result = direct_edges_inner(oracle, g, u, s, known, k, obs, &mut stats);
    obs.direct_edges(DirectEdgesEvent {
        vertex: u,
        s_len: s.len(),
        k,
        probes: oracle.probe_count() - start,
        pivot_rounds: stats.pivot_rounds,
        slow_shrinks: stats.slow_shrinks,
        aborted: result.is_err(),
    });
    result
}

#[allow(clippy::too_many_arguments)]
fn direct_edges_inner<O: Observer + ?Sized>(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    u: usize,
    s: &[usize],
    known: &mut OrientationStore,
    k: usize,
    obs: &mut O,
    stats: &mut DirectStats,
) -> Result<()> {
    let mut rest = s.to_vec();
    rest.sort_unstable();
    rest.dedup();
    let mut settled = FixedBitSet::with_capacity(g.n());

    while rest.len() > PROBE_ALL_FACTOR * k {
        let sub = Subproblem::induced(g, &rest);
        let before = oracle.probe_count();
        let found = pivot_with(known, &sub, k, obs)?;
        obs.pivot(PivotEvent {
            n_sub: sub.len(),
            k,
            pivot: found.pivot,
            s_plus: found.s_plus.len(),
            s_minus: found.s_minus.len(),
            probes_before: before,
            probes_after: oracle.probe_count(),
        });
        stats.pivot_rounds += 1;

        let p = found.pivot;
        settled.clear();
        settled.insert(p);
        if oracle.probe(u, p)? {
            known.record(u, p)?;
            for &x in &found.s_plus {
                known.record(u, x)?;
                settled.insert(x);
            }
        } else {
            known.record(p, u)?;
            for &x in &found.s_minus {
                known.record(x, u)?;
                settled.insert(x);
            }
        }
        let len = rest.len();
        rest.retain(|&x| !settled.contains(x));
        if len - rest.len() < 1 + len.div_ceil(3 * k) {
            stats.slow_shrinks += 1;
        }
    }

    for &x in &rest {
        let u_first = oracle.probe(u, x)?;
        known.record_outcome(u, x, u_first)?;
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct CliqueSolveOutput {
    pub orientation: OrientationStore,
    /// Largest `k` any insertion needed after retries.
    pub k_used: usize,
}

pub fn clique_solve(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    k: usize,
) -> Result<OrientationStore> {
    clique_solve_with(oracle, g, k, &mut ()).map(|out| out.orientation)
}

/// Inserts vertices in ascending id order, orienting each one's edges to
/// the vertices before it. An insertion that finds `k` too small is redone
/// with `k` doubled; cached probes make the redo free for edges already seen.
pub fn clique_solve_with<O: Observer + ?Sized>(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    k: usize,
    obs: &mut O,
) -> Result<CliqueSolveOutput> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!(
            "k must be at least 2, got {k}"
        )));
    }
    let n = g.n();
    let mut known = OrientationStore::new(n);
    let mut k_used = k;
    for u in 0..n {
        let nbrs = g.neighbors(u);
        let earlier = &nbrs[..nbrs.partition_point(|&v| v < u)];
        let mut k_u = k;
        loop {
            match direct_edges_with(oracle, g, u, earlier, &mut known, k_u, obs) {
                Ok(()) => break,
                Err(Error::KTooSmall { .. } | Error::EmptyIntersection { .. }) => {
                    let next = (2 * k_u).min(n.max(k_u + 1));
                    obs.k_raised(u, k_u, next);
                    k_u = next;
                }
                Err(e) => return Err(e),
            }
        }
        k_used = k_used.max(k_u);
    }
    Ok(CliqueSolveOutput {
        orientation: known,
        k_used,
    })
}
