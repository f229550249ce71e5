use std::collections::HashMap;

use poset_core::Poset;
use z2_core::{
    box_pair_elements, box_poset, enriched_pair_elements, ActionKind, EquivariantMap, Z2Complex,
    Z2Poset,
};

use crate::family::{kneser_graph, SetFamily};
use crate::neighborhood::{all_subsets_poset, neighborhood_masks, neighborhood_poset};
use crate::{Graph, GraphError};

const GROUND_BUDGET: usize = 14;

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True for ground subsets containing at least one member of the family.
fn covers(family: &SetFamily, mask: u64) -> bool {
    family.members().iter().any(|&m| m & !mask == 0)
}

fn check_budget(family: &SetFamily) -> Result<(), GraphError> {
    if family.ground() > GROUND_BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "Kneser box complexes on ground [{}] (budget [{}])",
            family.ground(),
            GROUND_BUDGET
        )));
    }
    Ok(())
}

fn pair_z2poset(
    family: &SetFamily,
    pairs: Vec<(u64, u64)>,
) -> Result<(Z2Poset, Vec<(u64, u64)>), GraphError> {
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(a, b)| {
            format!(
                "({},{})",
                family.ground_subset_label(a),
                family.ground_subset_label(b)
            )
        })
        .collect();
    let poset = Poset::from_closed_relation(labels, |i, j| {
        pairs[i].0 & !pairs[j].0 == 0 && pairs[i].1 & !pairs[j].1 == 0
    })?;
    let index: HashMap<(u64, u64), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let omega: Vec<usize> = pairs.iter().map(|&(a, b)| index[&(b, a)]).collect();
    let z2 = Z2Poset::new(poset, omega, ActionKind::Monotone)?;
    Ok((z2, pairs))
}

/// The chain-style Kneser box poset: pairs of disjoint ground subsets, each
/// side containing a member, ordered componentwise, with the swap action.
pub fn chain_kg_poset(family: &SetFamily) -> Result<(Z2Poset, Vec<(u64, u64)>), GraphError> {
    if family.members().is_empty() {
        return Err(GraphError::EmptyFamily);
    }
    check_budget(family)?;
    let full = full_mask(family.ground());
    let mut pairs = Vec::new();
    for a in 1..=full {
        if !covers(family, a) {
            continue;
        }
        let comp = full & !a;
        let mut b = comp;
        loop {
            if b != 0 && covers(family, b) {
                pairs.push((a, b));
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & comp;
        }
    }
    pairs.sort_unstable();
    pair_z2poset(family, pairs)
}

/// The Sarkaria-style Kneser box poset: disjoint pairs, not both empty, with
/// at least one side containing a member.
pub fn sark_kg_poset(family: &SetFamily) -> Result<(Z2Poset, Vec<(u64, u64)>), GraphError> {
    if family.members().is_empty() {
        return Err(GraphError::EmptyFamily);
    }
    check_budget(family)?;
    let full = full_mask(family.ground());
    let mut pairs = Vec::new();
    for a in 0..=full {
        let a_cov = covers(family, a);
        let comp = full & !a;
        let mut b = comp;
        loop {
            if (a, b) != (0, 0) && (a_cov || covers(family, b)) {
                pairs.push((a, b));
            }
            if b == 0 {
                break;
            }
            b = (b - 1) & comp;
        }
    }
    pairs.sort_unstable();
    pair_z2poset(family, pairs)
}

/// Order complex of the chain-style Kneser box poset.
pub fn b_chain_kg(family: &SetFamily) -> Result<Z2Complex, GraphError> {
    Ok(chain_kg_poset(family)?.0.order_z2complex()?)
}

/// Order complex of the Sarkaria-style Kneser box poset.
pub fn b_sark_kg(family: &SetFamily) -> Result<Z2Complex, GraphError> {
    Ok(sark_kg_poset(family)?.0.order_z2complex()?)
}

fn union_of_members(family: &SetFamily, vertex_mask: u64) -> u64 {
    let mut out = 0u64;
    let mut rest = vertex_mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= family.members()[i];
    }
    out
}

/// The union-of-members comparison from the box poset of the Kneser graph
/// into the chain-style Kneser box poset.
pub fn phi_map(family: &SetFamily) -> Result<EquivariantMap, GraphError> {
    let kg = kneser_graph(family)?;
    let wp = neighborhood_poset(&kg)?;
    let p_masks = neighborhood_masks(&kg);
    let source = box_poset(&wp);
    let source_pairs = box_pair_elements(&wp);
    let (target, target_pairs) = chain_kg_poset(family)?;
    let index: HashMap<(u64, u64), usize> = target_pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let assignment: Vec<usize> = source_pairs
        .iter()
        .map(|&(x, y)| {
            let a = union_of_members(family, p_masks[x]);
            let b = union_of_members(family, p_masks[y]);
            *index
                .get(&(a, b))
                .expect("disjoint covered pairs land in the chain-style poset")
        })
        .collect();
    Ok(EquivariantMap::new(source, target, assignment)?)
}

/// The union-of-members comparison from the enriched box poset (over all
/// nonempty vertex subsets) into the Sarkaria-style Kneser box poset.
pub fn psi_map(family: &SetFamily) -> Result<EquivariantMap, GraphError> {
    let kg = kneser_graph(family)?;
    let wp = neighborhood_poset(&kg)?;
    let p_masks = neighborhood_masks(&kg);
    let s = all_subsets_poset(&kg)?;
    let source_pairs = enriched_pair_elements(&wp, &s)?;
    let source = z2_core::enriched_box(&wp, &s)?;
    let (target, target_pairs) = sark_kg_poset(family)?;
    let index: HashMap<(u64, u64), usize> = target_pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    // subset-poset index i corresponds to vertex mask i+1; box coordinates
    // were embedded through labels of the neighborhood poset
    let coord_ground = |c: Option<usize>| -> u64 {
        match c {
            // s-index back to a kneser-vertex mask, then to ground
            Some(si) => union_of_members(family, (si as u64) + 1),
            None => 0,
        }
    };
    let _ = &p_masks;
    let assignment: Vec<usize> = source_pairs
        .iter()
        .map(|&(x, y)| {
            let key = (coord_ground(x), coord_ground(y));
            *index
                .get(&key)
                .expect("enriched pairs land in the Sarkaria-style poset")
        })
        .collect();
    Ok(EquivariantMap::new(source, target, assignment)?)
}

/// The edge box complex: vertices are ordered adjacent pairs, a set of
/// pairs is a face when the first and second coordinate sets are disjoint
/// and span a complete bipartite subgraph. Facets are the grids
/// `A x CN(A)` over closed `A`.
pub fn b_edge(g: &Graph) -> Result<Z2Complex, GraphError> {
    Ok(b_edge_with_pairs(g)?.0)
}

pub(crate) fn b_edge_with_pairs(g: &Graph) -> Result<(Z2Complex, Vec<(usize, usize)>), GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    if g.vertex_count() > crate::neighborhood::NEIGHBORHOOD_VERTEX_BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "edge box complex on {} vertices",
            g.vertex_count()
        )));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for u in 0..g.vertex_count() {
        for v in 0..g.vertex_count() {
            if g.has_edge(u, v) {
                pairs.push((u, v));
            }
        }
    }
    let pair_index: HashMap<(usize, usize), u32> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k as u32))
        .collect();
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(u, v)| format!("({},{})", g.label(u), g.label(v)))
        .collect();
    let mut facets = Vec::new();
    for &a in &neighborhood_masks(g) {
        let cn = g.common_neighbors(a);
        if g.common_neighbors(cn) != a {
            continue; // facets come from closed sets only
        }
        let mut facet = Vec::new();
        let mut ra = a;
        while ra != 0 {
            let u = ra.trailing_zeros() as usize;
            ra &= ra - 1;
            let mut rb = cn;
            while rb != 0 {
                let v = rb.trailing_zeros() as usize;
                rb &= rb - 1;
                facet.push(pair_index[&(u, v)]);
            }
        }
        facets.push(facet);
    }
    let complex = poset_core::SimplicialComplex::from_facets(labels, facets)?;
    let omega: Vec<u32> = pairs.iter().map(|&(u, v)| pair_index[&(v, u)]).collect();
    Ok((Z2Complex::new(complex, omega)?, pairs))
}

/// The coordinate-projection comparison from the face poset of the edge box
/// complex (ordered by inclusion, with the induced action) into the box
/// poset of the graph.
pub fn lambda_map(g: &Graph) -> Result<EquivariantMap, GraphError> {
    let (bedge, pairs) = b_edge_with_pairs(g)?;
    let faces = bedge.complex().all_faces();
    let labels: Vec<String> = faces
        .iter()
        .map(|f| bedge.complex().face_label(f))
        .collect();
    let face_poset = Poset::from_closed_relation(labels, |a, b| {
        faces[a].iter().all(|x| faces[b].binary_search(x).is_ok())
    })?;
    let face_index: HashMap<&[u32], usize> = faces
        .iter()
        .enumerate()
        .map(|(k, f)| (f.as_slice(), k))
        .collect();
    let omega: Vec<usize> = faces
        .iter()
        .map(|f| face_index[bedge.apply_face(f).as_slice()])
        .collect();
    let source = Z2Poset::new(face_poset, omega, ActionKind::Monotone)?;

    let wp = neighborhood_poset(g)?;
    let p_masks = neighborhood_masks(g);
    let mask_index: HashMap<u64, usize> = p_masks
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let target = box_poset(&wp);
    let box_index: HashMap<(usize, usize), usize> = box_pair_elements(&wp)
        .into_iter()
        .enumerate()
        .map(|(k, p)| (p, k))
        .collect();
    let assignment: Vec<usize> = faces
        .iter()
        .map(|f| {
            let mut first = 0u64;
            let mut second = 0u64;
            for &pid in f {
                let (u, v) = pairs[pid as usize];
                first |= 1 << u;
                second |= 1 << v;
            }
            let x = mask_index[&first];
            let y = mask_index[&second];
            box_index[&(x, y)]
        })
        .collect();
    Ok(EquivariantMap::new(source, target, assignment)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_kg_of_two_singletons_is_s0_shape() {
        let f = SetFamily::new(2, vec![0b01, 0b10]).unwrap();
        let (poset, pairs) = chain_kg_poset(&f).unwrap();
        assert_eq!(pairs, vec![(0b01, 0b10), (0b10, 0b01)]);
        assert!(!poset.poset().comparable(0, 1));
        assert_eq!(poset.omega(0), 1);
    }

    #[test]
    fn sark_kg_of_two_singletons() {
        let f = SetFamily::new(2, vec![0b01, 0b10]).unwrap();
        let (_, pairs) = sark_kg_poset(&f).unwrap();
        // (a,b) disjoint, not both empty, some side covered; ground {1,2}
        // covered masks: 01, 10, 11
        assert!(pairs.contains(&(0b01, 0)));
        assert!(pairs.contains(&(0, 0b01)));
        assert!(pairs.contains(&(0b11, 0)));
        assert!(!pairs.contains(&(0, 0)));
    }

    #[test]
    fn b_edge_of_k2_is_two_points() {
        let x = b_edge(&Graph::complete(2)).unwrap();
        assert_eq!(x.complex().vertex_count(), 2);
        assert_eq!(x.complex().facets().len(), 2);
        assert!(x.is_free());
    }

    #[test]
    fn phi_map_on_two_singletons() {
        let f = SetFamily::new(2, vec![0b01, 0b10]).unwrap();
        let m = phi_map(&f).unwrap();
        assert!(m.monotone().is_bijective());
    }

    #[test]
    fn psi_map_on_two_singletons() {
        let f = SetFamily::new(2, vec![0b01, 0b10]).unwrap();
        let m = psi_map(&f).unwrap();
        // enriched box of K2 has 8 elements; sark poset: pairs over [2]
        assert_eq!(m.source().poset().len(), 8);
        assert_eq!(m.target().poset().len(), 8);
    }

    #[test]
    fn lambda_on_k2_is_a_bijection_of_two_points() {
        let m = lambda_map(&Graph::complete(2)).unwrap();
        assert_eq!(m.source().poset().len(), 2);
        assert_eq!(m.target().poset().len(), 2);
        assert!(m.monotone().is_bijective());
    }
}
