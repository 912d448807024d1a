use crate::error::Result;
use crate::graph::ComparisonGraph;
use crate::oracle::GroundTruth;
use crate::orientation::{topological_order, OrientationStore};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub complete: bool,
    pub acyclic: bool,
    /// Every listed pair is a graph edge oriented as in the hidden order,
    /// and every edge is listed exactly once.
    pub agreement: bool,
    /// Listed pairs pointing against the hidden order.
    pub flipped: Vec<(usize, usize)>,
    pub missing: Vec<(usize, usize)>,
    /// Listed pairs that are not graph edges.
    pub extraneous: Vec<(usize, usize)>,
    /// Listed pairs whose edge was already listed.
    pub duplicates: Vec<(usize, usize)>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.complete && self.acyclic && self.agreement
    }
}

/// Checks a list of directed pairs against a graph and its hidden order.
pub fn verify(
    g: &ComparisonGraph,
    order: &[usize],
    orientation: &[(usize, usize)],
) -> Result<VerifyReport> {
    let truth = GroundTruth::from_order(g, order)?;
    let mut seen = OrientationStore::new(g.n());
    let mut report = VerifyReport::default();
    let mut out = vec![Vec::new(); g.n()];
    for &(u, v) in orientation {
        if !g.has_edge(u, v) {
            report.extraneous.push((u, v));
            continue;
        }
        if seen.contains(u, v) {
            report.duplicates.push((u, v));
            continue;
        }
        seen.record(u, v)?;
        out[u].push(v);
        if truth.precedes(u, v) == Some(false) {
            report.flipped.push((u, v));
        }
    }
    report.missing = g.edges().filter(|&(u, v)| !seen.contains(u, v)).collect();
    report.complete = report.missing.is_empty();
    report.acyclic = topological_order(&out).is_some();
    report.agreement = report.complete
        && report.flipped.is_empty()
        && report.extraneous.is_empty()
        && report.duplicates.is_empty();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_problems() {
        let g = ComparisonGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let order = [0, 1, 2];
        assert!(verify(&g, &order, &[(0, 1), (1, 2)]).unwrap().ok());

        let r = verify(&g, &order, &[(1, 0), (1, 2)]).unwrap();
        assert!(r.complete && r.acyclic && !r.agreement);
        assert_eq!(r.flipped, vec![(1, 0)]);

        let r = verify(&g, &order, &[(0, 1), (0, 2), (0, 1)]).unwrap();
        assert_eq!(r.extraneous, vec![(0, 2)]);
        assert_eq!(r.duplicates, vec![(0, 1)]);
        assert_eq!(r.missing, vec![(1, 2)]);
        assert!(!r.ok());
    }

    #[test]
    fn detects_cycles() {
        let g = ComparisonGraph::complete(3);
        let r = verify(&g, &[0, 1, 2], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!r.acyclic);
        assert_eq!(r.flipped, vec![(2, 0)]);
    }
}
