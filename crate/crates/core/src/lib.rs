//! Finite generalized root systems, their Weyl-groupoid Cayley graphs,
//! Hamiltonian cycles on those graphs, and adjacency spectra.
//!
//! The crate is organized bottom-up:
//!
//! - [`exact`]: exact integer linear algebra helpers.
//! - [`roots`]: root systems, bases, reflections, validation.
//! - [`families`]: named constructions (classical types, ε-families, rank-3
//!   super systems).
//! - [`graph`]: the Cayley graph of bases, quotients, Cartan schemes.
//! - [`hamilton`]: Hamiltonian-cycle verification and search.
//! - [`spectral`]: adjacency spectra and the Ramanujan predicate.
//! - [`perm`]: Cayley graphs of permutation groups (alternating families).
//! - [`error`]: the shared error type.

pub mod data;
pub(crate) mod data_tables;
pub mod error;
pub mod exact;
pub mod families;
pub mod graph;
pub mod hamilton;
pub mod perm;
pub mod roots;
pub mod spectral;

pub use error::{Error, Result};
pub use families::{
    build_classical, build_d21, build_epsilon_family, build_family, generate_super_fgrs,
    ClassicalType, EpsilonSpec, EpsilonVariant, Rat, SuperDatum,
};
pub use graph::{
    build_graph, export_graph, extract_cartan_scheme, graph_distance, import_graph_json,
    quotient_classes, CartanScheme, CayleyGraph, ExportFormat, QuotientMode,
};
pub use hamilton::{
    backtrack_search, backtrack_search_labeled, find, lift_search, lift_search_labeled,
    parse_cycle_json, parse_cycle_text, product_cycle, rank2_cycle, verify_cycle,
    verify_cycle_labeled, CycleWord, LabeledGraph, SearchConfig, SearchMethod, VerifyReport,
};
pub use perm::{
    alt_generators, build_perm_graph, commuting_relations_check, verify_perm_cycle,
    PermGroupGraph, Permutation,
};
pub use spectral::{
    adjacency, eigenvalues, graph_spectrum, is_bipartite_ramanujan, Spectrum,
};
pub use roots::{
    parse_roots, CoordVector, OrderedBase, ReducibleSplit, ReflectionMatrix, RootFormat,
    RootSystem, ValidationReport,
};
