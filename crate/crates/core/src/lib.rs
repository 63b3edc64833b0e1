//! Generalized k-connectivity of complete bipartite graphs `K_{a,b}`, with
//! explicit certificates.
//!
//! * [`packing`] builds `⌊ab/(a+b-1)⌋` edge-disjoint spanning trees.
//! * [`connectivity`] evaluates `κ_k(K_{a,b})` and `κ(S_i)` for every
//!   canonical terminal set.
//! * [`witness`] builds and verifies maximum families of internally
//!   disjoint trees connecting `S_i`.
//! * [`oracle`] is an exhaustive search used to cross-check all of the above
//!   on small instances.

pub mod bipartite;
pub mod connectivity;
pub mod error;
pub mod oracle;
pub mod packing;
pub mod witness;

pub use bipartite::{
    normalize, terminal_set, validate_tree, BipartiteOrder, Edge, Side, TerminalSet, Tree,
    TreeReport, TreeViolation, VertexId,
};
pub use connectivity::{
    kappa_bipartite, kappa_complete, kappa_terminal, min_terminal_index, KappaBreakdown,
};
pub use error::{Error, Result};
pub use oracle::{oracle_kappa_k, oracle_max_tree_set, oracle_spanning_packing, SmallGraph};
pub use packing::{
    build_packing, build_tree, degree_sequence, pack, residue_ordering, target_tree_count,
    DegreeSequence, SpanningTreePacking,
};
pub use witness::{
    build_a2_trees, build_internal_trees, build_witness, verify_witness, ClassifiedTree,
    ResidualLedger, SteinerWitness, TreeClass, WitnessReport, WitnessViolation,
};
