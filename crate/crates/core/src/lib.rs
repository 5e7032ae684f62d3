//! Partition graph `G_n`: construction, the self-conjugate axis and thin
//! spine, local complexity invariants, and the reports built from them.
//!
//! ```
//! use axial_core::{build_graph, AxialGeometry};
//!
//! let g = build_graph(8).unwrap();
//! let geom = AxialGeometry::compute(&g);
//! assert_eq!(g.vertex_count(), 22);
//! assert_eq!(geom.axis_size(), 2);
//! assert_eq!(geom.spine_size().unwrap(), 6);
//! assert_eq!(geom.central_region_size(1).unwrap(), 10);
//! ```

pub mod axial;
pub mod clique;
pub mod error;
pub mod export;
pub mod graph;
pub mod invariants;
pub mod partition;
pub mod report;
pub mod verify;

pub use axial::{
    compute_axis, compute_spine, interaction_graph, AxialGeometry, AxialPair, ShellCounts,
};
pub use clique::{local_clique_number, local_clique_number_oracle, ORACLE_MAX_DEGREE};
pub use error::{Error, Result};
pub use export::{export_graph, GraphFormat, VertexClass};
pub use graph::{build_graph, Distances, PartitionGraph, VertexId};
pub use invariants::{
    argmax_symmetry_check, profile, profiles, InvariantId, InvariantProfile, LocalValues,
};
pub use partition::{
    conjugate, corners, enumerate_partitions, is_self_conjugate, transfer_neighbors, Corner,
    CornerKind, Partition,
};
pub use report::{
    run_range, Analysis, BasicAxialRow, ExtremalRow, RunManifest, RunOptions, ShellRow,
};
pub use verify::{verify_range, CheckOutcome, CheckStatus};
