//! Orientation recovery from a proper coloring of the forbidden graph.
//!
//! Each color class is a set of pairwise comparable vertices, so it can be
//! merge-sorted into a chain. A two-pointer pass between every ordered pair
//! of chains then adds a few cross edges to a scaffold DAG whose transitive
//! closure orients every edge of `G`. The cost is `O(n log n + n k)` probes
//! for `k` colors.

use crate::error::{Error, Result};
use crate::graph::ComparisonGraph;
use crate::oracle::ProbeOracle;
use crate::orientation::{OrientationStore, ScaffoldGraph};
use crate::trace::{AddEdgesEvent, MergeSortEvent, Observer};

/// A map from vertices to colors `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// `colors[v]` is the color of vertex `v`; colors start at 1. `k` is the
    /// largest color used, so classes in between may be empty.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} has color 0; colors start at 1"
            )));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        Ok(Self { colors, k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of each color class in ascending id order; index `i` holds
    /// color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }
}

/// Color classes sorted under the hidden order. `chains[i][j]` has rank `j`
/// within class `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainDecomposition {
    pub chains: Vec<Vec<usize>>,
}

/// First same-color pair that is not an edge. Assumes `c` covers `g`.
fn first_conflict(g: &ComparisonGraph, c: &Coloring) -> Option<(usize, usize)> {
    c.classes().into_iter().find_map(|class| {
        class.iter().enumerate().find_map(|(a, &u)| {
            class[a + 1..]
                .iter()
                .find(|&&v| !g.has_edge(u, v))
                .map(|&v| (u, v))
        })
    })
}

/// True iff `c` covers every vertex and each same-color pair is an edge of `g`.
pub fn validate_coloring(g: &ComparisonGraph, c: &Coloring) -> bool {
    c.len() == g.n() && first_conflict(g, c).is_none()
}

pub(crate) fn ceil_log2(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// Worst-case probes for [`merge_sort_class`] on `len` vertices.
pub fn merge_sort_budget(len: usize) -> u64 {
    len as u64 * u64::from(ceil_log2(len))
}

/// Top-down stable merge sort of `s` under the hidden order.
///
/// Every pair in `s` must be comparable; otherwise the oracle reports
/// [`Error::ForbiddenPair`].
pub fn merge_sort_class(oracle: &mut ProbeOracle, s: &[usize]) -> Result<Vec<usize>> {
    if s.len() <= 1 {
        return Ok(s.to_vec());
    }
    let mid = s.len() / 2;
    let left = merge_sort_class(oracle, &s[..mid])?;
    let right = merge_sort_class(oracle, &s[mid..])?;
    let mut merged = Vec::with_capacity(s.len());
    let (mut a, mut b) = (0, 0);
    while a < left.len() && b < right.len() {
        if oracle.probe(left[a], right[b])? {
            merged.push(left[a]);
            a += 1;
        } else {
            merged.push(right[b]);
            b += 1;
        }
    }
    merged.extend_from_slice(&left[a..]);
    merged.extend_from_slice(&right[b..]);
    Ok(merged)
}

/// Two-pointer pass adding cross edges from `chain_j` into `chain_i`.
///
/// `L` walks `chain_j` from the top. For each `L` the comparable members of
/// `chain_i` strictly below the pointer `R` are probed top-down against
/// `chain_j[L]`; each one found above `chain_j[L]` pulls `R` down to it and
/// the first one found below ends the scan. When the scan moved `R`, the
/// edge `chain_j[L] -> chain_i[R]` joins the scaffold.
///
/// Each probe lowers `L + R`, so a call costs at most
/// `|chain_i| + |chain_j|` fresh probes. Returns the number of edges added.
pub fn add_edges(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    chain_i: &[usize],
    chain_j: &[usize],
    a: &mut ScaffoldGraph,
) -> Result<usize> {
    let mut r = chain_i.len();
    let mut added = 0;
    for &low in chain_j.iter().rev() {
        let mut moved = false;
        for x in (0..r).rev() {
            let high = chain_i[x];
            if !g.has_edge(low, high) {
                continue;
            }
            if oracle.probe(low, high)? {
                r = x;
                moved = true;
            } else {
                break;
            }
        }
        // An unmoved R was set for a later L; that edge plus the chain
        // already reaches chain_i[R].
        if moved {
            a.add_edge(low, chain_i[r]);
            added += 1;
        }
    }
    Ok(added)
}

#[derive(Clone, Debug)]
pub struct ColorSolveOutput {
    pub orientation: OrientationStore,
    pub chains: ChainDecomposition,
    pub scaffold: ScaffoldGraph,
}

pub fn color_solve(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    c: &Coloring,
) -> Result<OrientationStore> {
    color_solve_with(oracle, g, c, &mut ()).map(|out| out.orientation)
}

pub fn color_solve_with<O: Observer + ?Sized>(
    oracle: &mut ProbeOracle,
    g: &ComparisonGraph,
    c: &Coloring,
    obs: &mut O,
) -> Result<ColorSolveOutput> {
    if c.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    if let Some((u, v)) = first_conflict(g, c) {
        return Err(Error::InvalidColoring { u, v });
    }
    let n = g.n();
    let mut scaffold = ScaffoldGraph::new(n);

    let mut chains = Vec::with_capacity(c.k());
    for class in c.classes() {
        let before = oracle.probe_count();
        let chain = merge_sort_class(oracle, &class)?;
        obs.merge_sort(MergeSortEvent {
            len: chain.len(),
            probes: oracle.probe_count() - before,
        });
        for w in chain.windows(2) {
            scaffold.add_edge(w[0], w[1]);
        }
        chains.push(chain);
    }

    for (i, chain_i) in chains.iter().enumerate() {
        for (j, chain_j) in chains.iter().enumerate() {
            if i == j || chain_i.is_empty() || chain_j.is_empty() {
                continue;
            }
            let before = oracle.probe_count();
            let edges_added = add_edges(oracle, g, chain_i, chain_j, &mut scaffold)?;
            obs.add_edges(AddEdgesEvent {
                i,
                j,
                len_i: chain_i.len(),
                len_j: chain_j.len(),
                probes: oracle.probe_count() - before,
                edges_added,
            });
        }
    }

    let reach = scaffold.closure()?;
    let mut orientation = OrientationStore::new(n);
    for (u, v) in g.edges() {
        match (reach[u].contains(v), reach[v].contains(u)) {
            (true, false) => orientation.record(u, v)?,
            (false, true) => orientation.record(v, u)?,
            (fwd, back) => {
                return Err(Error::Internal(format!(
                    "edge {{{u}, {v}}} reachable forward={fwd} backward={back} in the scaffold"
                )))
            }
        }
    }

    Ok(ColorSolveOutput {
        orientation,
        chains: ChainDecomposition { chains },
        scaffold,
    })
}
