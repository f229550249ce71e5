use std::collections::BTreeSet;

use poset_core::SimplicialComplex;
use z2_core::Z2Complex;

use crate::{Graph, GraphError};

const IND_BUDGET: usize = 22;

/// The path on vertices 1..n (edges between consecutive integers).
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall("path needs at least one vertex".into()));
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(labels, &pairs)
}

/// The cycle on vertices 1..n.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall("cycle needs at least 3 vertices".into()));
    }
    let labels = (1..=n).map(|i| i.to_string()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    pairs.push((0, n - 1));
    Graph::new(labels, &pairs)
}

/// The reversal `i -> n + 1 - i` as a zero-based permutation; a graph
/// automorphism of both the path and the cycle on [n].
pub fn reversal_involution(n: usize) -> Vec<usize> {
    (0..n).map(|i| n - 1 - i).collect()
}

/// The independence complex: faces are the independent vertex sets. The
/// involution, if given, must be an automorphism; the identity is used
/// otherwise.
pub fn ind_complex(g: &Graph, involution: Option<&[usize]>) -> Result<Z2Complex, GraphError> {
    let n = g.vertex_count();
    if n > IND_BUDGET {
        return Err(GraphError::BudgetExceeded(format!(
            "independence complex on {n} vertices (budget {IND_BUDGET})"
        )));
    }
    if let Some(perm) = involution {
        if !g.is_automorphism(perm) {
            return Err(GraphError::NotAutomorphism(format!("{perm:?}")));
        }
        for (i, &p) in perm.iter().enumerate() {
            if perm[p] != i {
                return Err(GraphError::NotInvolution(g.label(i).to_string()));
            }
        }
    }
    let full = g.full_mask();
    let mut facets = Vec::new();
    for mask in 1..=full {
        if !g.is_independent(mask) {
            continue;
        }
        // maximal: no vertex outside can be added
        let mut extendable = false;
        for v in 0..n {
            if mask >> v & 1 == 0 && g.neighbors_mask(v) & mask == 0 {
                extendable = true;
                break;
            }
        }
        if !extendable {
            facets.push(
                (0..n as u32)
                    .filter(|&v| mask >> v & 1 == 1)
                    .collect::<Vec<u32>>(),
            );
        }
    }
    let complex = SimplicialComplex::from_facets(g.labels().to_vec(), facets)?;
    let omega: Vec<u32> = match involution {
        Some(perm) => perm.iter().map(|&p| p as u32).collect(),
        None => (0..n as u32).collect(),
    };
    Ok(Z2Complex::new(complex, omega)?)
}

#[derive(Clone, Copy, Debug)]
pub enum DeletionCut {
    Vertex(usize),
    Edge(usize, usize),
}

/// The two-piece decomposition of an independence complex along a vertex or
/// an edge, with the literal intersection and a face-by-face check of the
/// union identity.
pub struct IndDecomposition {
    /// The complex being decomposed: Ind(G) for a vertex cut, Ind(G - e)
    /// for an edge cut.
    pub whole: SimplicialComplex,
    pub x: SimplicialComplex,
    pub y: SimplicialComplex,
    /// Faces (as label sets) common to `x` and `y`.
    pub intersection_faces: Vec<Vec<String>>,
    pub union_holds: bool,
}

fn face_label_set(k: &SimplicialComplex) -> BTreeSet<Vec<String>> {
    k.all_faces()
        .into_iter()
        .map(|f| {
            let mut ls: Vec<String> = f.iter().map(|&v| k.label(v).to_string()).collect();
            ls.sort();
            ls
        })
        .collect()
}

/// Cone over a complex with a fresh apex list, in the ambient label world.
fn cone(apexes: &[String], base: &SimplicialComplex) -> Result<SimplicialComplex, GraphError> {
    let mut labels: Vec<String> = apexes.to_vec();
    labels.extend(base.labels().iter().cloned());
    let offset = apexes.len() as u32;
    let apex_ids: Vec<u32> = (0..offset).collect();
    let facets: Vec<Vec<u32>> = base
        .facets()
        .iter()
        .map(|f| {
            let mut g: Vec<u32> = apex_ids.clone();
            g.extend(f.iter().map(|&v| v + offset));
            g
        })
        .collect();
    Ok(SimplicialComplex::from_facets(labels, facets)?)
}

pub fn deletion_decomposition(
    g: &Graph,
    cut: DeletionCut,
) -> Result<IndDecomposition, GraphError> {
    match cut {
        DeletionCut::Vertex(v) => {
            if v >= g.vertex_count() {
                return Err(GraphError::UnknownVertex(format!("#{v}")));
            }
            let whole = ind_complex(g, None)?.complex().clone();
            let x = ind_complex(&g.delete_vertices(1 << v), None)?.complex().clone();
            let no_star = g.delete_vertices(g.star_mask(v));
            let y = if no_star.vertex_count() == 0 {
                SimplicialComplex::new(vec![g.label(v).to_string()], vec![])?
            } else {
                cone(
                    &[g.label(v).to_string()],
                    ind_complex(&no_star, None)?.complex(),
                )?
            };
            finish(whole, x, y)
        }
        DeletionCut::Edge(u, v) => {
            if !g.has_edge(u, v) {
                return Err(GraphError::UnknownEdge(
                    g.label(u).to_string(),
                    g.label(v).to_string(),
                ));
            }
            let whole = ind_complex(&g.delete_edge(u, v)?, None)?.complex().clone();
            let x = ind_complex(g, None)?.complex().clone();
            let star_both = g.star_mask(u) | g.star_mask(v);
            let rest = g.delete_vertices(star_both);
            let apexes = vec![g.label(u).to_string(), g.label(v).to_string()];
            let y = if rest.vertex_count() == 0 {
                SimplicialComplex::new(apexes, vec![vec![0, 1]])?
            } else {
                cone(&apexes, ind_complex(&rest, None)?.complex())?
            };
            finish(whole, x, y)
        }
    }
}

fn finish(
    whole: SimplicialComplex,
    x: SimplicialComplex,
    y: SimplicialComplex,
) -> Result<IndDecomposition, GraphError> {
    let fw = face_label_set(&whole);
    let fx = face_label_set(&x);
    let fy = face_label_set(&y);
    let union: BTreeSet<Vec<String>> = fx.union(&fy).cloned().collect();
    let union_holds = union == fw;
    let intersection_faces: Vec<Vec<String>> = fx.intersection(&fy).cloned().collect();
    Ok(IndDecomposition {
        whole,
        x,
        y,
        intersection_faces,
        union_holds,
    })
}

/// The palindromic generating-simplex vertex set in [6p-1]: the union of the
/// arithmetic runs 2,5,...,3p-4 and 3p+4,...,6p-5 with 3p-1, 3p+1 and 6p-2.
pub fn generating_simplex_formula(p: usize) -> Vec<usize> {
    assert!(p >= 1);
    let mut s = BTreeSet::new();
    let mut v = 2i64;
    while v <= 3 * p as i64 - 4 {
        s.insert(v as usize);
        v += 3;
    }
    s.insert(3 * p - 1);
    s.insert(3 * p + 1);
    let mut v = 3 * p as i64 + 4;
    while v <= 6 * p as i64 - 5 {
        s.insert(v as usize);
        v += 3;
    }
    s.insert(6 * p - 2);
    s.into_iter().collect()
}
