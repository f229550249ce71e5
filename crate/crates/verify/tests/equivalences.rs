//! The five-complex family of a graph's weak involution: the order
//! complexes of the Lovasz poset, the box posets of the base and of the
//! Lovasz subposet, and the interval and chain posets of the Lovasz
//! subposet all share one homology, and their actions are all free on the
//! neighborhood posets of simple graphs.

use graph_complexes::neighborhood_poset;
use homology_engine::reduced_betti;
use verify::corpus::{connected_graphs, seeded_six_vertex};
use z2_core::{box_poset, induced_action_chain, induced_action_interval, WiPoset, Z2Poset};

const CHAIN_GUARD: usize = 150_000;

fn family_of(wp: &WiPoset) -> Vec<(&'static str, Z2Poset)> {
    let lov = wp.lovasz();
    let wl = WiPoset::new(lov.poset().clone(), lov.omega_map().to_vec()).unwrap();
    vec![
        ("lovasz", lov.clone()),
        ("box", box_poset(wp)),
        ("box-of-lovasz", box_poset(&wl)),
        ("interval", induced_action_interval(&lov).unwrap()),
        ("chain", induced_action_chain(&lov).unwrap()),
    ]
}

#[test]
fn five_complexes_share_homology_and_freeness() {
    let mut graphs = connected_graphs(2, 5);
    graphs.extend(seeded_six_vertex(8, 42));
    let mut skipped = 0;
    for g in &graphs {
        let wp = neighborhood_poset(g).unwrap();
        let family = family_of(&wp);
        if family
            .iter()
            .any(|(_, q)| q.poset().count_chains_capped(CHAIN_GUARD).is_none())
        {
            skipped += 1;
            continue;
        }
        let mut reference = None;
        for (name, q) in &family {
            let complex = q.order_z2complex().unwrap();
            assert!(
                complex.is_free(),
                "{name} of a simple graph carries an invariant face: {g:?}"
            );
            let betti = reduced_betti(complex.complex());
            match &reference {
                None => reference = Some(betti),
                Some(r) => assert_eq!(
                    &betti, r,
                    "{name} diverges from the family homology on {g:?}"
                ),
            }
        }
        // the weak-involution axioms hold on every corpus instance
        assert!(wp.diagnostics().pass());
    }
    // the guard exists for dense 6-vertex samples; the exhaustive corpus
    // always runs
    assert!(skipped <= 3, "too many skipped instances: {skipped}");
}
