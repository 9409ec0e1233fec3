//! Judicious partitions of 3-uniform hypergraphs.
//!
//! Every 3-uniform hypergraph with `m` edges has a partition of its vertices
//! into three classes each meeting at least `3m/5` edges; [`pipeline::solve`]
//! constructs one and returns a recomputable [`Certificate`]. The supporting
//! pieces are exposed as well: local search on the triple degree,
//! bipartitions of multigraphs with special vertices, brute-force oracles and
//! instance generators.

pub mod certificate;
pub mod counting;
pub mod error;
pub mod exact;
pub mod generators;
pub mod hypergraph;
pub mod local_search;
pub mod oracle;
pub mod partition;
pub mod pipeline;
pub mod ratio;
pub mod rng;
pub mod special;

pub use certificate::{Certificate, Method, OptimalityFlags};
pub use error::{Error, Result};
pub use hypergraph::{EdgeSet, Hypergraph3, MultiEdge, MultiHypergraph, SpecialMultigraph, Vertex};
pub use partition::{Bipartition, Class, Side, Signature, Tripartition};
pub use ratio::Ratio;
pub use pipeline::{solve, verify_good, SolveOutcome};
