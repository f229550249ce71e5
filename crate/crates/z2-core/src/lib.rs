//! Z2-structure on top of `poset-core`: weakly involutive posets, genuine
//! involutive posets and complexes, the box-poset family, induced actions on
//! interval and chain posets, and fixed-point models.
//!
//! The fixed set of a simplicial involution is modelled by the order complex
//! of the poset of invariant faces; this is the honest simplicial model of
//! the geometric fixed set (it becomes a subcomplex after one barycentric
//! subdivision).

mod boxes;
mod maps;
mod wi;
mod z2complex;
mod z2poset;

pub use boxes::{
    box_pair_elements, box_poset, enriched_box, enriched_pair_elements, extended_box, Coord,
};
pub use maps::{omega_iso, sigma_map, theta_map, is_wi_morphism, EquivariantMap, WiMorphismReport};
pub use wi::{check_wi, wi_poset_from_json, WiDiagnostics, WiPoset};
pub use z2complex::{involution_from_pairs, z2complex_from_json, Z2Complex};
pub use z2poset::{
    induced_action_chain, induced_action_interval, two_point_extension, ActionKind, Z2Poset,
};

/// Reserved labels for the two adjoined minima of a suspension extension.
pub const A1_LABEL: &str = "_a1";
pub const A2_LABEL: &str = "_a2";

#[derive(Debug, Clone, thiserror::Error)]
pub enum Z2Error {
    #[error("weak involution axioms violated: {0}")]
    WiAxiomViolation(String),
    #[error("map is not an involution at `{0}`")]
    NotInvolution(String),
    #[error("involution does not respect its declared kind: {0}")]
    KindViolation(String),
    #[error("operation requires an antitone action, got a monotone one")]
    KindMismatch,
    #[error("involution is not simplicial: image of face {0} is not a face")]
    NotSimplicial(String),
    #[error("not an induced subposet: {0}")]
    NotASubposet(String),
    #[error("map is not equivariant at `{0}`")]
    NotEquivariant(String),
    #[error(transparent)]
    Poset(#[from] poset_core::PosetError),
}
