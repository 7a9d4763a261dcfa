//! Exact partial domination for simple undirected graphs.
//!
//! A set `S` of vertices covers the vertices in its closed neighborhood
//! `N[S]`; for a fraction `alpha` in `(0, 1]`, `pd_alpha(G)` is the smallest
//! size of a set covering at least `ceil(n * alpha)` vertices. At `alpha = 1`
//! this is the domination number.
//!
//! The crate provides:
//! - graph construction, generation (`path`, `cycle`, `complete`,
//!   `complete_bipartite`, `star`, `clique_plus_isolates`, `edgeless`,
//!   seeded `gnp`), and edge-list / DIMACS text formats;
//! - an exact branch-and-bound solver with canonical (lexicographically
//!   smallest) witnesses, an independent brute-force oracle, and a greedy
//!   baseline;
//! - coverage profiles `g(k) = max_{|S|=k} |N[S]|` and the full spectrum of
//!   `pd` over `alpha`, with its exact rational critical values;
//! - executable checks for the known bounds (degree, domination-number
//!   quotients, split sums, component additivity, edge/vertex removal,
//!   complement bounds) and for vertex criticality, all reported with
//!   explicit hypotheses so sweeps can assert zero violations.
//!
//! All thresholds are decided in integer arithmetic; `alpha` is an exact
//! rational throughout.

pub mod alpha;
pub mod bounds;
pub mod critical;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod set;
pub mod solver;
pub mod spectrum;
pub mod verify;

pub use alpha::{coverage_target, half_steps, parse_unit_ratio, unit_steps, Alpha, AlphaError};
pub use bounds::{
    check_component_additivity, check_degree_bounds, check_gamma_bounds, check_nordhaus_gaddum,
    check_removal, check_sum_bounds, BoundReport, Exact, Relation, TheoremId,
};
pub use critical::{check_vertex_critical, private_neighborhood, Certificate, CriticalityReport};
pub use format::{
    parse_dimacs, parse_edge_list, parse_graph, serialize_dimacs, serialize_edge_list,
    serialize_graph, sniff_format, Format, ParseError, ParseErrorKind,
};
pub use generate::{generate, parse_graph_spec, Family, GenerateError};
pub use graph::{closed_neighborhood, Component, Graph, GraphError};
pub use oracle::{brute_force_pd, brute_force_pd_capped, OracleError, DEFAULT_ORACLE_CAP};
pub use set::VertexSet;
pub use solver::{
    domination_number, greedy_pd, pd_alpha, pd_by_target, GreedyResult, PdResult, TargetError,
};
pub use spectrum::{
    coverage_profile, spectrum, verify_spectrum_structure, ClauseStatus, CoverageProfile,
    SpectrumClause, SpectrumResult, SpectrumStructureReport,
};
pub use verify::{verify_graph, VerifySummary};
