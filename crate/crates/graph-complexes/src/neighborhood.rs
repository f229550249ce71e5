use poset_core::Poset;
use z2_core::{box_poset, enriched_box, extended_box, WiPoset, Z2Complex, Z2Poset};

use crate::{Graph, GraphError};

/// Canonical label for a vertex subset: sorted member labels in braces.
pub fn subset_label(g: &Graph, mask: u64) -> String {
    let mut ls: Vec<&str> = (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| g.label(v))
        .collect();
    ls.sort_unstable();
    format!("{{{}}}", ls.join(","))
}

/// Subset enumeration walks 2^n masks; past this many vertices the
/// neighborhood machinery refuses rather than hangs.
pub const NEIGHBORHOOD_VERTEX_BUDGET: usize = 20;

/// Element masks of the neighborhood poset: nonempty vertex sets with at
/// least one common neighbor, in ascending mask order.
pub fn neighborhood_masks(g: &Graph) -> Vec<u64> {
    assert!(
        g.vertex_count() <= NEIGHBORHOOD_VERTEX_BUDGET,
        "neighborhood enumeration needs at most {NEIGHBORHOOD_VERTEX_BUDGET} vertices"
    );
    let full = g.full_mask();
    let mut masks = Vec::new();
    let mut a = 1u64;
    loop {
        if g.common_neighbors(a) != 0 {
            masks.push(a);
        }
        if a == full {
            break;
        }
        a += 1;
    }
    masks
}

/// The neighborhood poset: vertex sets with a common neighbor, ordered by
/// inclusion, with the common-neighbor map as weak involution.
pub fn neighborhood_poset(g: &Graph) -> Result<WiPoset, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    if g.vertex_count() > NEIGHBORHOOD_VERTEX_BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "neighborhood poset on {} vertices (budget {NEIGHBORHOOD_VERTEX_BUDGET})",
            g.vertex_count()
        )));
    }
    let masks = neighborhood_masks(g);
    let labels: Vec<String> = masks.iter().map(|&m| subset_label(g, m)).collect();
    let poset = Poset::from_closed_relation(labels, |a, b| masks[a] & !masks[b] == 0)?;
    let index: std::collections::HashMap<u64, usize> = masks
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let c: Vec<usize> = masks
        .iter()
        .map(|&m| {
            let cn = g.common_neighbors(m);
            *index
                .get(&cn)
                .expect("common-neighbor sets have common neighbors themselves")
        })
        .collect();
    Ok(WiPoset::new(poset, c)?)
}

/// The poset of all nonempty vertex subsets, labelled compatibly with the
/// neighborhood poset. This is the contractible enrichment behind the
/// fourth avatar.
pub fn all_subsets_poset(g: &Graph) -> Result<Poset, GraphError> {
    let full = g.full_mask();
    let masks: Vec<u64> = (1..=full).collect();
    let labels: Vec<String> = masks.iter().map(|&m| subset_label(g, m)).collect();
    Ok(Poset::from_closed_relation(labels, |a, b| {
        masks[a] & !masks[b] == 0
    })?)
}

/// The box poset enriched over all nonempty vertex subsets.
pub fn b0_poset(g: &Graph) -> Result<Z2Poset, GraphError> {
    let p = neighborhood_poset(g)?;
    let s = all_subsets_poset(g)?;
    Ok(enriched_box(&p, &s)?)
}

/// The four order-complex avatars of a graph, each carrying its action.
pub struct Avatars {
    /// Order complex of the Lovasz poset, with the restricted
    /// common-neighbor involution.
    pub lovasz: Z2Complex,
    /// Order complex of the box poset (coordinate swap).
    pub box_chain: Z2Complex,
    /// Order complex of the extended box poset.
    pub box_extended: Z2Complex,
    /// Order complex of the box poset enriched over all nonempty vertex
    /// subsets; carries the suspension of the common homotopy type.
    pub b0: Z2Complex,
}

impl Avatars {
    pub fn named(&self) -> [(&'static str, &Z2Complex); 4] {
        [
            ("lovasz", &self.lovasz),
            ("box_chain", &self.box_chain),
            ("box_extended", &self.box_extended),
            ("b0", &self.b0),
        ]
    }
}

pub fn avatars(g: &Graph) -> Result<Avatars, GraphError> {
    let p = neighborhood_poset(g)?;
    let lovasz = p.lovasz().order_z2complex()?;
    let box_chain = box_poset(&p).order_z2complex()?;
    let box_extended = extended_box(&p)?.order_z2complex()?;
    let b0 = b0_poset(g)?.order_z2complex()?;
    Ok(Avatars {
        lovasz,
        box_chain,
        box_extended,
        b0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ind::{cycle_graph, path_graph};

    #[test]
    fn neighborhood_poset_of_path3() {
        let g = path_graph(3).unwrap();
        let p = neighborhood_poset(&g).unwrap();
        assert_eq!(p.poset().len(), 4);
        let two = p.poset().index_of("{2}").unwrap();
        let onethree = p.poset().index_of("{1,3}").unwrap();
        assert_eq!(p.c(two), onethree);
        assert_eq!(p.c(onethree), two);
    }

    #[test]
    fn neighborhood_poset_of_k2() {
        let g = Graph::complete(2);
        let p = neighborhood_poset(&g).unwrap();
        assert_eq!(p.poset().len(), 2);
        assert_eq!(p.c(0), 1);
        assert_eq!(p.c(1), 0);
    }

    #[test]
    fn neighborhood_poset_of_triangle() {
        let p = neighborhood_poset(&Graph::complete(3)).unwrap();
        assert_eq!(p.poset().len(), 6);
        // CN of a pair is the third vertex
        let pair = p.poset().index_of("{1,2}").unwrap();
        let third = p.poset().index_of("{3}").unwrap();
        assert_eq!(p.c(pair), third);
    }

    #[test]
    fn edgeless_graph_is_rejected() {
        let g = Graph::new(vec!["a".into()], &[]).unwrap();
        assert!(matches!(neighborhood_poset(&g), Err(GraphError::NoEdges)));
    }

    #[test]
    fn wi_axioms_hold_on_small_graphs() {
        for g in [
            Graph::complete(2),
            Graph::complete(3),
            Graph::complete(4),
            path_graph(4).unwrap(),
            cycle_graph(5).unwrap(),
        ] {
            let p = neighborhood_poset(&g).unwrap();
            assert!(p.diagnostics().pass());
        }
    }

    #[test]
    fn avatars_of_k2() {
        let a = avatars(&Graph::complete(2)).unwrap();
        assert_eq!(a.lovasz.complex().vertex_count(), 2);
        assert_eq!(a.box_chain.complex().vertex_count(), 2);
        assert_eq!(a.box_extended.complex().vertex_count(), 6);
        assert_eq!(a.b0.complex().vertex_count(), 8);
        for (_, x) in a.named() {
            assert!(x.is_free());
        }
    }
}
