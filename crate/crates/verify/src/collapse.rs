use homology_engine::reduce::{collapse, FaceTable};
use homology_engine::{reduced_betti, BettiVector};
use poset_core::SimplicialComplex;

use crate::rng;

/// Contractibility evidence, strongest first: a full collapse sequence is a
/// sound certificate; vanishing reduced homology is honest partial evidence.
#[derive(Clone, Debug)]
pub enum ContractibilityVerdict {
    Collapsible(Vec<(Vec<u32>, Vec<u32>)>),
    HomologyPoint,
    NontrivialHomology(BettiVector),
    Empty,
}

impl ContractibilityVerdict {
    pub fn tier(&self) -> &'static str {
        match self {
            ContractibilityVerdict::Collapsible(_) => "collapse",
            ContractibilityVerdict::HomologyPoint => "homology-point",
            ContractibilityVerdict::NontrivialHomology(_) => "nontrivial",
            ContractibilityVerdict::Empty => "empty",
        }
    }

    pub fn is_contractible_evidence(&self) -> bool {
        matches!(
            self,
            ContractibilityVerdict::Collapsible(_) | ContractibilityVerdict::HomologyPoint
        )
    }
}

/// Greedy free-face collapses with lexicographic tie-break, then seeded
/// randomized restarts, then a homology fallback.
pub fn collapsibility(
    k: &SimplicialComplex,
    seed: u64,
    restarts: u32,
) -> ContractibilityVerdict {
    // a cone collapses deterministically: pair every face missing the apex
    // with its extension, top dimension first
    if let Some(apex) = cone_apex(k) {
        return ContractibilityVerdict::Collapsible(cone_sequence(k, apex));
    }
    let table = FaceTable::build(k);
    let base = collapse(&table, &table.lex_priority(), true);
    if base.collapsed_to_point() {
        return ContractibilityVerdict::Collapsible(steps_of(&table, base.steps.unwrap()));
    }
    for r in 1..=restarts {
        let priority: Vec<u64> = (0..table.len() as u64)
            .map(|id| rng::mix(seed ^ r as u64, id))
            .collect();
        let run = collapse(&table, &priority, true);
        if run.collapsed_to_point() {
            return ContractibilityVerdict::Collapsible(steps_of(&table, run.steps.unwrap()));
        }
    }
    let betti = reduced_betti(k);
    if betti.is_homology_point() {
        ContractibilityVerdict::HomologyPoint
    } else {
        ContractibilityVerdict::NontrivialHomology(betti)
    }
}

fn steps_of(table: &FaceTable, ids: Vec<(u32, u32)>) -> Vec<(Vec<u32>, Vec<u32>)> {
    ids.into_iter()
        .map(|(s, t)| {
            (
                table.faces[s as usize].clone(),
                table.faces[t as usize].clone(),
            )
        })
        .collect()
}

fn cone_apex(k: &SimplicialComplex) -> Option<u32> {
    let first = k.facets().first()?;
    first
        .iter()
        .copied()
        .find(|&v| k.facets().iter().all(|f| f.binary_search(&v).is_ok()))
}

fn cone_sequence(k: &SimplicialComplex, apex: u32) -> Vec<(Vec<u32>, Vec<u32>)> {
    let mut off_apex: Vec<Vec<u32>> = k
        .all_faces()
        .into_iter()
        .filter(|f| f.binary_search(&apex).is_err())
        .collect();
    off_apex.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    off_apex
        .into_iter()
        .map(|f| {
            let mut ext = f.clone();
            let pos = ext.binary_search(&apex).unwrap_err();
            ext.insert(pos, apex);
            (f, ext)
        })
        .collect()
}

/// Replays a collapse sequence, verifying every pair is free at its turn and
/// that a single vertex remains. Test support for certificate soundness.
pub fn replay_sequence(k: &SimplicialComplex, steps: &[(Vec<u32>, Vec<u32>)]) -> bool {
    let table = FaceTable::build(k);
    let mut alive = vec![true; table.len()];
    let mut coface_count: Vec<u32> = table.cofaces.iter().map(|c| c.len() as u32).collect();
    for (sigma, tau) in steps {
        let Some(&s) = table.index.get(sigma) else {
            return false;
        };
        let Some(&t) = table.index.get(tau) else {
            return false;
        };
        let (s, t) = (s as usize, t as usize);
        if !alive[s] || !alive[t] || coface_count[s] != 1 || coface_count[t] != 0 {
            return false;
        }
        if !table.cofaces[s].contains(&(t as u32)) {
            return false;
        }
        alive[s] = false;
        alive[t] = false;
        for &rho in table.subfaces[s].iter().chain(table.subfaces[t].iter()) {
            if alive[rho as usize] {
                coface_count[rho as usize] -= 1;
            }
        }
    }
    let survivors: Vec<usize> = (0..table.len()).filter(|&i| alive[i]).collect();
    survivors.len() == 1 && table.faces[survivors[0]].len() == 1
}
