//! Instance generation, baseline and hybrid solvers, verification, and
//! probe-count benchmarking.

mod bench;
mod generate;
mod solve;
mod verify;

pub use bench::{
    bench, grid, summarize, write_csv, BenchJob, BenchRecord, BenchSummary, CSV_HEADER,
};
pub use generate::{
    gen_er, gen_nuts_bolts, gen_stochastic, generate, Instance, InstanceSpec, Model,
};
pub use solve::{
    brute_force_solve, hybrid_solve, hybrid_solve_with, hybrid_threshold, solve, Algo,
    HybridBranch, HybridOutput, SolveOptions, SolveReport,
};
pub use verify::{verify, VerifyReport};
