//! Graph-theoretic model of knitting.
//!
//! A knit object is modeled three ways: the [`KnittingGraph`] (stitches and
//! their adjacencies), the colored [`DirectedKnitGraph`] and the
//! [`YarnGraph`] multigraph that traces the physical yarn. On top of these
//! the crate decides k-knittability of DAGs through a bounded flow network,
//! computes path covers and yarn decompositions, and classifies drawings
//! by complexity.

pub mod cover;
pub mod error;
pub mod feasibility;
pub mod flow;
pub mod graph;
pub mod io;
pub mod layout;
pub mod patterns;
pub mod planarity;
pub mod yarn;

pub use cover::{
    brute_force_knittable, build_flow_network, decide_k_knittable, extract_threads,
    has_hamiltonian_path_dag, minimum_path_cover, solve_flow_with_bounds, FlowNetwork, OracleInput,
    ThreadCover, Witness,
};
pub use error::{Error, Result};
pub use feasibility::{
    check_coloring, check_coloring_with_boundary, classify_vertex, feasibility_table,
    red_config_allowed, Boundary, ColoringReport, RedRule, RoleSet,
};
pub use graph::{DirectedKnitGraph, Edge, EdgeColor, KnittingGraph, VertexId, YarnGraph};
pub use io::{fixture_document, parse_json, to_dot, Document, LoadedGraph};
pub use layout::{
    cable_width, classify_complexity, count_rows, crossing_graph, test_simple_knittable,
    ComplexityClass, CrossingGraph, NaturalLayout,
};
pub use patterns::{
    emit_instructions, gen_brioche_maximal, gen_stitch_fixture, gen_stockinette, Fixture,
};
pub use planarity::is_planar;
pub use yarn::{eulerian_path, is_yarn_graph_of_k_knittable, minimum_yarns, yarn_from_threads};
