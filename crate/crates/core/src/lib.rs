//! Recover the hidden acyclic orientation of a comparison graph with as few
//! oracle probes as possible.
//!
//! A [`ComparisonGraph`] lists which pairs may be compared. A
//! [`ProbeOracle`] answers one comparison per probe and counts distinct
//! probes. The solvers return an [`OrientationStore`] with every edge
//! directed:
//!
//! * [`color_solve`] sorts the color classes of a proper coloring of the
//!   forbidden graph and links them with a two-pointer pass.
//! * [`clique_solve`] inserts vertices one by one, settling many edges per
//!   probe through pivots with known predecessors and successors.
//! * [`harness::brute_force_solve`] and [`harness::hybrid_solve`] cover the
//!   baseline and density-switched strategies.
//!
//! ```
//! use probesort::{clique_solve, harness::gen_er};
//!
//! let instance = gen_er(40, 0.6, 7).unwrap();
//! let mut oracle = instance.oracle();
//! let k = probesort::analysis::estimate_k(&instance.graph).k;
//! let orientation = clique_solve(&mut oracle, &instance.graph, k).unwrap();
//! assert_eq!(orientation.directed_edges(), instance.truth.directed_edges());
//! assert!(oracle.probe_count() <= instance.graph.m() as u64);
//! ```

pub mod analysis;
pub mod cliquesolve;
pub mod colorsolve;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod oracle;
pub mod orientation;
pub mod trace;

pub use cliquesolve::{clique_solve, direct_edges, pivot, select, select_reversed};
pub use colorsolve::{add_edges, color_solve, merge_sort_class, validate_coloring, Coloring};
pub use error::{Error, Result};
pub use graph::{forbidden_graph, ComparisonGraph, ForbiddenGraph};
pub use oracle::{GroundTruth, ProbeOracle};
pub use orientation::{reachable, validate_orientation, OrientationStore, ScaffoldGraph};
