use std::collections::{HashMap, HashSet};

use poset_core::{Poset, SimplicialComplex};
use z2_core::{ActionKind, Z2Poset};

use crate::neighborhood::{neighborhood_masks, subset_label};
use crate::{Graph, GraphError};

const JOIN_FACE_BUDGET: usize = 2_000_000;

/// The G-deleted join of a complex: one copy of `k` per vertex of `g`, with
/// the copies along each edge forced to use disjoint vertex sets. Copy `i`
/// of vertex `v` is labelled `i:v`.
pub fn g_deleted_join(k: &SimplicialComplex, g: &Graph) -> Result<SimplicialComplex, GraphError> {
    let m = g.vertex_count();
    if m == 0 {
        return Err(GraphError::GroundMismatch("empty ground graph".into()));
    }
    let copy_faces: Vec<Vec<u32>> = k.all_faces();
    let per_copy = copy_faces.len() + 1; // the empty face is a legal choice
    let mut budget = 1usize;
    for _ in 0..m {
        budget = budget.saturating_mul(per_copy);
        if budget > JOIN_FACE_BUDGET {
            return Err(GraphError::BudgetExceeded(format!(
                "G-deleted join would enumerate more than {JOIN_FACE_BUDGET} tuples"
            )));
        }
    }

    let nk = k.vertex_count() as u32;
    let mut labels = Vec::with_capacity(m * k.vertex_count());
    for i in 0..m {
        for v in 0..k.vertex_count() {
            labels.push(format!("{}:{}", g.label(i), k.label(v as u32)));
        }
    }

    // face masks of k for the disjointness test
    let face_mask = |f: &[u32]| -> u64 { f.iter().fold(0u64, |acc, &v| acc | (1 << v)) };
    let masks: Vec<u64> = copy_faces.iter().map(|f| face_mask(f)).collect();

    let mut all: Vec<Vec<u32>> = Vec::new();
    let mut chosen: Vec<Option<usize>> = vec![None; m];
    fn rec(
        g: &Graph,
        copy_faces: &[Vec<u32>],
        masks: &[u64],
        nk: u32,
        chosen: &mut Vec<Option<usize>>,
        i: usize,
        all: &mut Vec<Vec<u32>>,
    ) {
        if i == chosen.len() {
            let mut face: Vec<u32> = Vec::new();
            for (copy, ch) in chosen.iter().enumerate() {
                if let Some(fi) = ch {
                    face.extend(copy_faces[*fi].iter().map(|&v| v + copy as u32 * nk));
                }
            }
            if !face.is_empty() {
                all.push(face);
            }
            return;
        }
        chosen[i] = None;
        rec(g, copy_faces, masks, nk, chosen, i + 1, all);
        'faces: for fi in 0..copy_faces.len() {
            for j in 0..i {
                if g.has_edge(j, i) {
                    if let Some(prev) = chosen[j] {
                        if masks[prev] & masks[fi] != 0 {
                            continue 'faces;
                        }
                    }
                }
            }
            chosen[i] = Some(fi);
            rec(g, copy_faces, masks, nk, chosen, i + 1, all);
        }
        chosen[i] = None;
    }
    rec(g, &copy_faces, &masks, nk, &mut chosen, 0, &mut all);

    // extract facets: a face is maximal iff no single-vertex extension stays
    // in the (downward-closed) family
    let face_set: HashSet<Vec<u32>> = all.iter().cloned().collect();
    let total_vertices = (m * k.vertex_count()) as u32;
    let mut facets = Vec::new();
    'cand: for f in &all {
        for v in 0..total_vertices {
            if f.binary_search(&v).is_err() {
                let mut ext = f.clone();
                let pos = ext.binary_search(&v).unwrap_err();
                ext.insert(pos, v);
                if face_set.contains(&ext) {
                    continue 'cand;
                }
            }
        }
        facets.push(f.clone());
    }
    Ok(SimplicialComplex::from_facets(labels, facets)?)
}

/// The Hom poset of multihomomorphisms: tuples over the neighborhood poset
/// of `h`, one coordinate per vertex of `g`, complete-bipartite along every
/// edge, ordered componentwise. For `g = K2` the coordinate swap is
/// attached.
pub struct HomPoset {
    pub poset: Poset,
    /// Tuples of neighborhood-poset masks, aligned with poset elements.
    pub tuples: Vec<Vec<u64>>,
    /// The swap action, present exactly when `g` is an edge.
    pub swap: Option<Z2Poset>,
}

pub fn hom_poset(g: &Graph, h: &Graph) -> Result<HomPoset, GraphError> {
    if g.vertex_count() == 0 || h.vertex_count() == 0 {
        return Err(GraphError::TooSmall("both graphs must be nonempty".into()));
    }
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    let p_masks = neighborhood_masks(h);
    let m = g.vertex_count();
    let mut budget = 1usize;
    for _ in 0..m {
        budget = budget.saturating_mul(p_masks.len().max(1));
        if budget > JOIN_FACE_BUDGET {
            return Err(GraphError::BudgetExceeded(format!(
                "Hom poset would scan more than {JOIN_FACE_BUDGET} tuples"
            )));
        }
    }
    let mut tuples: Vec<Vec<u64>> = Vec::new();
    let mut cur: Vec<u64> = Vec::with_capacity(m);
    fn rec(
        g: &Graph,
        h: &Graph,
        p_masks: &[u64],
        cur: &mut Vec<u64>,
        tuples: &mut Vec<Vec<u64>>,
    ) {
        let i = cur.len();
        if i == g.vertex_count() {
            tuples.push(cur.clone());
            return;
        }
        'next: for &x in p_masks {
            let cnx = h.common_neighbors(x);
            for j in 0..i {
                if g.has_edge(j, i) {
                    let y = cur[j];
                    // complete bipartite between the two coordinate sets
                    if x & !h.common_neighbors(y) != 0 || y & !cnx != 0 {
                        continue 'next;
                    }
                }
            }
            cur.push(x);
            rec(g, h, p_masks, cur, tuples);
            cur.pop();
        }
    }
    rec(g, h, &p_masks, &mut cur, &mut tuples);

    let labels: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|&x| subset_label(h, x)).collect();
            format!("({})", parts.join(";"))
        })
        .collect();
    let poset = Poset::from_closed_relation(labels, |a, b| {
        tuples[a]
            .iter()
            .zip(tuples[b].iter())
            .all(|(&x, &y)| x & !y == 0)
    })?;
    let swap = if m == 2 && !tuples.is_empty() {
        let index: HashMap<(u64, u64), usize> = tuples
            .iter()
            .enumerate()
            .map(|(k, t)| ((t[0], t[1]), k))
            .collect();
        let omega: Vec<usize> = tuples.iter().map(|t| index[&(t[1], t[0])]).collect();
        Some(Z2Poset::new(poset.clone(), omega, ActionKind::Monotone)?)
    } else {
        None
    };
    Ok(HomPoset {
        poset,
        tuples,
        swap,
    })
}

fn is_complete(h: &Graph) -> bool {
    let n = h.vertex_count();
    h.edge_count() == n * (n - 1) / 2
}

/// The extended Hom complex. For a complete target this is the G-deleted
/// join of a simplex, cross-checked against the direct enumeration of
/// extended multihomomorphisms; for a general target it is the order
/// complex of the poset of such functions under componentwise containment.
pub fn hom_ex_complex(g: &Graph, h: &Graph) -> Result<SimplicialComplex, GraphError> {
    if g.edge_count() == 0 {
        return Err(GraphError::NoEdges);
    }
    if is_complete(h) && h.vertex_count() >= 1 {
        let simplex = SimplicialComplex::new(
            h.labels().to_vec(),
            vec![(0..h.vertex_count() as u32).collect()],
        )?;
        let join = g_deleted_join(&simplex, g)?;
        // cross-check: faces of the join model are exactly the graphs of
        // extended multihomomorphisms into the complete target
        let expected = hom_ex_tuples(g, h)?;
        let got: HashSet<Vec<u32>> = join.all_faces().into_iter().collect();
        if expected.len() != got.len()
            || expected.iter().any(|f| !got.contains(f))
        {
            return Err(GraphError::GroundMismatch(
                "deleted-join model disagrees with the extended Hom enumeration".into(),
            ));
        }
        return Ok(join);
    }
    // general target: order complex of the extended Hom poset
    let tuples = hom_ex_tuples(g, h)?;
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| {
            let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let poset = Poset::from_closed_relation(labels, |a, b| {
        tuples[a].iter().all(|x| tuples[b].binary_search(x).is_ok())
    })?;
    Ok(poset.order_complex()?)
}

/// Vertex sets (in the m x n grid, copy-major) of all extended
/// multihomomorphisms: some coordinate nonempty, disjoint along edges, and
/// complete-bipartite in `h` along edges.
fn hom_ex_tuples(g: &Graph, h: &Graph) -> Result<Vec<Vec<u32>>, GraphError> {
    let m = g.vertex_count();
    let n = h.vertex_count();
    let mut budget = 1usize;
    for _ in 0..m {
        budget = budget.saturating_mul(1 << n);
        if budget > JOIN_FACE_BUDGET {
            return Err(GraphError::BudgetExceeded(
                "extended Hom enumeration too large".into(),
            ));
        }
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    let mut cur: Vec<u64> = Vec::with_capacity(m);
    fn rec(
        g: &Graph,
        h: &Graph,
        full: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let i = cur.len();
        if i == g.vertex_count() {
            if cur.iter().any(|&x| x != 0) {
                let n = h.vertex_count() as u32;
                let mut face = Vec::new();
                for (copy, &mask) in cur.iter().enumerate() {
                    for v in 0..n {
                        if mask >> v & 1 == 1 {
                            face.push(copy as u32 * n + v);
                        }
                    }
                }
                out.push(face);
            }
            return;
        }
        'next: for x in 0..=full {
            for j in 0..i {
                if g.has_edge(j, i) {
                    let y = cur[j];
                    if x & y != 0 {
                        continue 'next;
                    }
                    // every cross pair must be an edge of h
                    let mut rest = x;
                    let mut ok = true;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        if y & !h.neighbors_mask(v) != 0 {
                            ok = false;
                            break;
                        }
                    }
                    if !ok {
                        continue 'next;
                    }
                }
            }
            cur.push(x);
            rec(g, h, full, cur, out);
            cur.pop();
        }
    }
    rec(g, h, full, &mut cur, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ind::{cycle_graph, ind_complex};
    use homology_engine::{join_complexes, reduced_betti, BettiVector};

    fn point() -> SimplicialComplex {
        SimplicialComplex::new(vec!["p".into()], vec![]).unwrap()
    }

    #[test]
    fn deleted_join_of_point_is_independence_complex() {
        for g in [cycle_graph(5).unwrap(), Graph::complete(3)] {
            let join = g_deleted_join(&point(), &g).unwrap();
            let ind = ind_complex(&g, None).unwrap();
            assert_eq!(
                reduced_betti(&join),
                reduced_betti(ind.complex()),
                "on {g:?}"
            );
            assert_eq!(join.all_faces().len(), ind.complex().all_faces().len());
        }
    }

    #[test]
    fn edgeless_ground_gives_plain_join() {
        let g = Graph::new(vec!["1".into(), "2".into()], &[]).unwrap();
        let s0 = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let join = g_deleted_join(&s0, &g).unwrap();
        // plain join of two copies of S^0 is a circle
        assert_eq!(reduced_betti(&join), BettiVector::sphere(1));
    }

    #[test]
    fn deleted_join_distributes_over_join() {
        let s0 = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let pt = point();
        for g in [
            Graph::complete(2),
            Graph::new(vec!["1".into(), "2".into(), "3".into()], &[(0, 1), (1, 2)]).unwrap(),
        ] {
            let kl = join_complexes(&s0, &pt).unwrap();
            let left = g_deleted_join(&kl, &g).unwrap();
            let right = join_complexes(
                &g_deleted_join(&s0, &g).unwrap(),
                &g_deleted_join(&pt, &g).unwrap(),
            )
            .unwrap();
            assert_eq!(reduced_betti(&left), reduced_betti(&right), "on {g:?}");
        }
    }

    #[test]
    fn hom_k2_matches_box_poset_size() {
        // Hom(K2, K3) poset is the box poset of the K3 neighborhood poset
        let hp = hom_poset(&Graph::complete(2), &Graph::complete(3)).unwrap();
        assert_eq!(hp.poset.len(), 12);
        assert!(hp.swap.is_some());
        let betti = reduced_betti(&hp.poset.order_complex().unwrap());
        assert_eq!(betti, BettiVector::sphere(1));
    }

    #[test]
    fn hom_k3_k2_is_empty() {
        let hp = hom_poset(&Graph::complete(3), &Graph::complete(2)).unwrap();
        assert_eq!(hp.poset.len(), 0);
    }

    #[test]
    fn hom_ex_c5_k2_is_s3() {
        let k = hom_ex_complex(&cycle_graph(5).unwrap(), &Graph::complete(2)).unwrap();
        assert_eq!(reduced_betti(&k), BettiVector::sphere(3));
    }

    #[test]
    fn hom_ex_k2_k2_is_circle() {
        let k = hom_ex_complex(&Graph::complete(2), &Graph::complete(2)).unwrap();
        assert_eq!(reduced_betti(&k), BettiVector::sphere(1));
    }

    #[test]
    fn edgeless_source_rejected() {
        let g = Graph::new(vec!["1".into()], &[]).unwrap();
        assert!(matches!(
            hom_ex_complex(&g, &Graph::complete(2)),
            Err(GraphError::NoEdges)
        ));
    }
}
