//! Named verification suites, one per structural result family. Every suite
//! is deterministic given its seed; instances run in parallel and are merged
//! in a fixed order.

mod avatar_suites;
mod csorba;
mod fatlat;
mod hom;
mod ind;
mod kneser;
mod poset_suites;

pub use avatar_suites::{avatar_instance, b0_reference};
pub use csorba::csorba_instance;

use crate::report::VerificationReport;
use crate::VerifyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteName {
    Omega,
    Sigma,
    Theta,
    Extended,
    Enriched,
    Avatars,
    Kneser,
    Csorba,
    Ind,
    Hom,
    Fatlat,
}

impl SuiteName {
    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Omega => "omega",
            SuiteName::Sigma => "sigma",
            SuiteName::Theta => "theta",
            SuiteName::Extended => "extended",
            SuiteName::Enriched => "enriched",
            SuiteName::Avatars => "avatars",
            SuiteName::Kneser => "kneser",
            SuiteName::Csorba => "csorba",
            SuiteName::Ind => "ind",
            SuiteName::Hom => "hom",
            SuiteName::Fatlat => "fatlat",
        }
    }

    pub fn all() -> [SuiteName; 11] {
        [
            SuiteName::Omega,
            SuiteName::Sigma,
            SuiteName::Theta,
            SuiteName::Extended,
            SuiteName::Enriched,
            SuiteName::Avatars,
            SuiteName::Kneser,
            SuiteName::Csorba,
            SuiteName::Ind,
            SuiteName::Hom,
            SuiteName::Fatlat,
        ]
    }
}

impl std::str::FromStr for SuiteName {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::all()
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub seed: u64,
    /// Exhaustive corpus bound (connected graphs on 3..=max_vertices).
    pub max_vertices: usize,
    /// Seeded distinct 6-vertex samples appended to the corpus.
    pub six_vertex_samples: usize,
    /// Instance count for the sampled-poset suites.
    pub count: usize,
    /// Independence-complex parameter: runs p = 1..=p over cycles/paths on
    /// 6p-1 vertices.
    pub p: usize,
    pub large: bool,
    pub restarts: u32,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            seed: 42,
            max_vertices: 5,
            six_vertex_samples: 50,
            count: 100,
            p: 2,
            large: false,
            restarts: 32,
        }
    }
}

impl SuiteParams {
    fn validate(&self) -> Result<(), VerifyError> {
        let max_exhaustive = if self.large { 6 } else { 5 };
        if self.max_vertices > max_exhaustive {
            return Err(VerifyError::BudgetExceeded(format!(
                "exhaustive corpus up to {} vertices needs --large (cap 6)",
                self.max_vertices
            )));
        }
        let max_p = if self.large { 3 } else { 2 };
        if self.p > max_p {
            return Err(VerifyError::BudgetExceeded(format!(
                "independence suite p={} (cap {max_p}{})",
                self.p,
                if self.large { "" } else { "; use --large for 3" }
            )));
        }
        if self.count > 2000 || self.six_vertex_samples > 100 {
            return Err(VerifyError::BudgetExceeded(
                "instance counts capped at 2000 / 100".into(),
            ));
        }
        Ok(())
    }
}

pub fn run_suite(name: SuiteName, params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    params.validate()?;
    match name {
        SuiteName::Omega => poset_suites::omega(params),
        SuiteName::Sigma => poset_suites::sigma(params),
        SuiteName::Theta => poset_suites::theta(params),
        SuiteName::Extended => poset_suites::extended(params),
        SuiteName::Enriched => poset_suites::enriched(params),
        SuiteName::Avatars => avatar_suites::avatars_suite(params),
        SuiteName::Kneser => kneser::kneser_suite(params),
        SuiteName::Csorba => csorba::csorba_suite(params),
        SuiteName::Ind => ind::ind_suite(params),
        SuiteName::Hom => hom::hom_suite(params),
        SuiteName::Fatlat => fatlat::fatlat_suite(params),
    }
}

pub(crate) mod util {
    use graph_complexes::Graph;
    use homology_engine::{reduced_betti, BettiVector};
    use z2_core::Z2Complex;

    use crate::report::{BettiLine, InstanceReport};

    /// Betti + face-count line for a Z2-complex, plus its freeness.
    pub fn complex_line(
        report: &mut InstanceReport,
        name: &str,
        x: &Z2Complex,
    ) -> (BettiVector, bool) {
        let betti = reduced_betti(x.complex());
        report.betti_line(BettiLine::new(name, &betti, Some(x.complex())));
        (betti, x.is_free())
    }

    /// The three standing Kneser families.
    pub fn kneser_families() -> Vec<(String, graph_complexes::SetFamily)> {
        vec![
            (
                "kneser[n=4,k=2]".into(),
                graph_complexes::SetFamily::k_subsets(4, 2).unwrap(),
            ),
            (
                "kneser[n=5,k=2]".into(),
                graph_complexes::SetFamily::k_subsets(5, 2).unwrap(),
            ),
            (
                "kneser[n=4,k=1]".into(),
                graph_complexes::SetFamily::singletons(4).unwrap(),
            ),
        ]
    }

    pub fn corpus_with_k2(max_vertices: usize, six: usize, seed: u64) -> Vec<Graph> {
        let mut graphs = vec![Graph::complete(2)];
        graphs.extend(crate::corpus::connected_graphs(3, max_vertices));
        if six > 0 {
            graphs.extend(crate::corpus::seeded_six_vertex(six, seed));
        }
        graphs
    }
}
