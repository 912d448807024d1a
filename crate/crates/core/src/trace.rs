//! Per-call instrumentation for the solvers.
//!
//! Solvers report each subroutine call to an [`Observer`]. `()` ignores
//! everything; [`Trace`] keeps every event for later assertions.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeSortEvent {
    pub len: usize,
    pub probes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AddEdgesEvent {
    /// Chain whose pointer `R` moves.
    pub i: usize,
    /// Chain scanned from the top by `L`.
    pub j: usize,
    pub len_i: usize,
    pub len_j: usize,
    pub probes: u64,
    pub edges_added: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelectEvent {
    pub n_sub: usize,
    pub k: usize,
    pub reversed: bool,
    pub rounds: usize,
    /// Size of the survivor set `Z`.
    pub survivors: usize,
    /// Smallest recorded set over the survivors, `None` if `Z` is empty.
    pub min_recorded: Option<usize>,
    /// Largest root count seen at the end of a merge loop.
    pub max_roots: usize,
    /// Every merge loop ended with pairwise non-adjacent roots.
    pub roots_independent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PivotEvent {
    pub n_sub: usize,
    pub k: usize,
    pub pivot: usize,
    pub s_plus: usize,
    pub s_minus: usize,
    pub probes_before: u64,
    pub probes_after: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectEdgesEvent {
    pub vertex: usize,
    pub s_len: usize,
    pub k: usize,
    pub probes: u64,
    pub pivot_rounds: usize,
    /// While-iterations that removed fewer than `1 + ceil(|S| / 3k)` vertices.
    pub slow_shrinks: usize,
    /// The call ended in `KTooSmall` or `EmptyIntersection`.
    pub aborted: bool,
}

pub trait Observer {
    fn merge_sort(&mut self, _event: MergeSortEvent) {}
    fn add_edges(&mut self, _event: AddEdgesEvent) {}
    fn select(&mut self, _event: SelectEvent) {}
    fn pivot(&mut self, _event: PivotEvent) {}
    fn direct_edges(&mut self, _event: DirectEdgesEvent) {}
    fn k_raised(&mut self, _vertex: usize, _from: usize, _to: usize) {}
}

impl Observer for () {}

/// Records every event.
#[derive(Clone, Debug, Default)]
pub struct Trace {
    pub merge_sorts: Vec<MergeSortEvent>,
    pub add_edges: Vec<AddEdgesEvent>,
    pub selects: Vec<SelectEvent>,
    pub pivots: Vec<PivotEvent>,
    pub direct_edges: Vec<DirectEdgesEvent>,
    /// `(vertex, old k, new k)` for every retry.
    pub k_raises: Vec<(usize, usize, usize)>,
}

impl Observer for Trace {
    fn merge_sort(&mut self, event: MergeSortEvent) {
        self.merge_sorts.push(event);
    }

    fn add_edges(&mut self, event: AddEdgesEvent) {
        self.add_edges.push(event);
    }

    fn select(&mut self, event: SelectEvent) {
        self.selects.push(event);
    }

    fn pivot(&mut self, event: PivotEvent) {
        self.pivots.push(event);
    }

    fn direct_edges(&mut self, event: DirectEdgesEvent) {
        self.direct_edges.push(event);
    }

    fn k_raised(&mut self, vertex: usize, from: usize, to: usize) {
        self.k_raises.push((vertex, from, to));
    }
}
