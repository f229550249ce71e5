//! Finite posets and the order-theoretic constructions everything else is
//! built from: order complexes, chain posets, interval posets, face posets,
//! barycentric subdivision and bottom adjunction.
//!
//! All values are immutable after construction and safe to share between
//! threads. Order relations are stored reflexively and transitively closed,
//! so comparability queries are O(1).

mod bitmat;
mod complex;
mod io;
mod map;
mod poset;

pub use complex::SimplicialComplex;
pub use io::{complex_from_json, complex_to_json};
pub use map::MonotoneMap;
pub use poset::{Chain, Poset};

/// Reserved label for the adjoined minimum element.
pub const BOTTOM_LABEL: &str = "_bot";

#[derive(Debug, Clone, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("cycle detected: `{0}` and `{1}` are mutually comparable")]
    CycleDetected(String, String),
    #[error("empty poset")]
    EmptyPoset,
    #[error("empty complex")]
    EmptyComplex,
    #[error("reserved label `{0}` present in input")]
    ReservedLabel(String),
    #[error("face {0:?} references an unknown vertex")]
    BadFace(Vec<String>),
    #[error("map is not total: element `{0}` has no image")]
    NotTotal(String),
    #[error("map is not monotone: {0} <= {1} but images are not ordered")]
    NotMonotone(String, String),
    #[error("parse error: {0}")]
    Parse(String),
}
