//! Graph-side constructions: the neighborhood poset and its box-complex
//! avatars, Kneser box complexes with their comparison maps, independence
//! complexes of paths and cycles, G-deleted joins and Hom posets, and the
//! compatibility graphs of free I-semilattices.
//!
//! Vertex sets are u64 bitmasks throughout, which caps graphs at 64
//! vertices; every instance this crate is meant for is far smaller.

mod family;
mod graph;
mod hom;
mod ind;
mod io;
mod kneser;
mod neighborhood;
mod semilattice;

pub use family::{kneser_graph, SetFamily};
pub use graph::Graph;
pub use hom::{g_deleted_join, hom_ex_complex, hom_poset, HomPoset};
pub use ind::{
    cycle_graph, deletion_decomposition, generating_simplex_formula, ind_complex, path_graph,
    reversal_involution, DeletionCut, IndDecomposition,
};
pub use io::{graph_from_edge_list, involution_from_json, set_family_from_json};
pub use kneser::{
    b_chain_kg, b_edge, b_sark_kg, chain_kg_poset, lambda_map, phi_map, psi_map, sark_kg_poset,
};
pub use neighborhood::{
    avatars, b0_poset, neighborhood_masks, neighborhood_poset, subset_label, Avatars,
};
pub use semilattice::{
    compatibility_graph, is_fat, nn_closure, FreeISemilattice, LatPoint, NnClosure,
};

#[derive(Debug, Clone, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge ({0},{1})")]
    UnknownEdge(String, String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("empty set family")]
    EmptyFamily,
    #[error("parameter too small: {0}")]
    TooSmall(String),
    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a graph automorphism: {0}")]
    NotAutomorphism(String),
    #[error("involution has a fixed point at `{0}`")]
    NotFree(String),
    #[error("not a semilattice: {0}")]
    NotSemilattice(String),
    #[error("involution is not monotone: {0}")]
    NotMonotone(String),
    #[error("not an involution at `{0}`")]
    NotInvolution(String),
    #[error("interval decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("ground set mismatch: {0}")]
    GroundMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Z2(#[from] z2_core::Z2Error),
    #[error(transparent)]
    Poset(#[from] poset_core::PosetError),
}
