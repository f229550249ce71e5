//! The theorem-checking layer: contractibility certificates via elementary
//! collapses, Quillen fiber checks, two-level (total space + fixed points)
//! Bredon checks, order-homotopy retraction checks, generating-simplex
//! certificates, and the named suites that replay each structural result on
//! a small corpus.

mod checks;
mod collapse;
pub mod corpus;
mod report;
pub mod rng;
pub mod suites;

pub use checks::{
    bredon_check, generating_simplex_check, order_homotopy_check, quillen_check, BredonReport,
    FiberDirection, FixedLevel, GenSimplexReport, OrderHomotopyReport, QuillenReport,
};
pub use collapse::{collapsibility, replay_sequence, ContractibilityVerdict};
pub use report::{BettiLine, CheckLine, InstanceReport, VerificationReport};
pub use suites::{run_suite, SuiteName, SuiteParams};

#[derive(Debug, Clone, thiserror::Error)]
pub enum VerifyError {
    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<String>),
    #[error("pointwise order violated at `{0}`")]
    PointwiseOrderViolated(String),
    #[error("maps must share source and target")]
    MapMismatch,
    #[error("size budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error(transparent)]
    Graph(#[from] graph_complexes::GraphError),
    #[error(transparent)]
    Z2(#[from] z2_core::Z2Error),
    #[error(transparent)]
    Poset(#[from] poset_core::PosetError),
}
