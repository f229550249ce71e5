use std::collections::{HashMap, HashSet};

use crate::{Poset, PosetError};

/// A finite abstract simplicial complex, stored by its facets (maximal
/// faces). Every vertex is a face; the empty face is implicit and never
/// listed. The void complex (no faces at all) is unrepresentable.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    index: HashMap<String, u32>,
    facets: Vec<Vec<u32>>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SimplicialComplex({} vertices, {} facets)",
            self.labels.len(),
            self.facets.len()
        )
    }
}

impl SimplicialComplex {
    /// Builds from an arbitrary face list. Faces are sorted and deduplicated,
    /// vertices missing from every face become isolated singleton facets, and
    /// non-maximal faces are dropped.
    pub fn new(labels: Vec<String>, faces: Vec<Vec<u32>>) -> Result<Self, PosetError> {
        if labels.is_empty() {
            return Err(PosetError::EmptyComplex);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as u32).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len() as u32;
        let mut cleaned: Vec<Vec<u32>> = Vec::with_capacity(faces.len() + labels.len());
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            if f.iter().any(|&v| v >= n) {
                return Err(PosetError::BadFace(
                    f.iter().map(|v| v.to_string()).collect(),
                ));
            }
            cleaned.push(f);
        }
        for v in 0..n {
            cleaned.push(vec![v]);
        }
        cleaned.sort();
        cleaned.dedup();
        // keep only inclusion-maximal faces
        let mut facets: Vec<Vec<u32>> = Vec::new();
        for f in &cleaned {
            let maximal = !cleaned
                .iter()
                .any(|g| g.len() > f.len() && is_subset_u32(f, g));
            if maximal {
                facets.push(f.clone());
            }
        }
        facets.sort();
        Ok(SimplicialComplex {
            labels,
            index,
            facets,
        })
    }

    /// Builds from faces known to be mutually non-contained (e.g. maximal
    /// chains of a poset). Cheaper than `new`; falls back to it in debug.
    pub fn from_facets(labels: Vec<String>, mut facets: Vec<Vec<u32>>) -> Result<Self, PosetError> {
        if labels.is_empty() {
            return Err(PosetError::EmptyComplex);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i as u32).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len() as u32;
        let mut covered = vec![false; labels.len()];
        for f in facets.iter_mut() {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() || f.iter().any(|&v| v >= n) {
                return Err(PosetError::BadFace(
                    f.iter().map(|v| v.to_string()).collect(),
                ));
            }
            for &v in f.iter() {
                covered[v as usize] = true;
            }
        }
        for v in 0..labels.len() {
            if !covered[v] {
                facets.push(vec![v as u32]);
            }
        }
        facets.sort();
        facets.dedup();
        Ok(SimplicialComplex {
            labels,
            index,
            facets,
        })
    }

    /// Builds from a downward-closed face family: facets are the faces with
    /// no one-vertex extension in the family. Vertices missing from every
    /// face are dropped (with their labels), so deleting a maximal face
    /// behaves like honest face removal.
    pub fn from_closed_faces(
        labels: Vec<String>,
        faces: Vec<Vec<u32>>,
    ) -> Result<Self, PosetError> {
        let mut used = vec![false; labels.len()];
        for f in &faces {
            for &v in f {
                if v as usize >= labels.len() {
                    return Err(PosetError::BadFace(
                        f.iter().map(|v| v.to_string()).collect(),
                    ));
                }
                used[v as usize] = true;
            }
        }
        let kept: Vec<u32> = (0..labels.len() as u32).filter(|&v| used[v as usize]).collect();
        if kept.is_empty() {
            return Err(PosetError::EmptyComplex);
        }
        let mut rank = vec![u32::MAX; labels.len()];
        for (r, &v) in kept.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        let new_labels: Vec<String> = kept.iter().map(|&v| labels[v as usize].clone()).collect();
        let reindexed: Vec<Vec<u32>> = faces
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| rank[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        let face_set: HashSet<&[u32]> = reindexed.iter().map(|f| f.as_slice()).collect();
        let n = new_labels.len() as u32;
        let mut facets = Vec::new();
        'cand: for f in &reindexed {
            for v in 0..n {
                if f.binary_search(&v).is_err() {
                    let mut ext = f.clone();
                    let pos = ext.binary_search(&v).unwrap_err();
                    ext.insert(pos, v);
                    if face_set.contains(ext.as_slice()) {
                        continue 'cand;
                    }
                }
            }
            facets.push(f.clone());
        }
        SimplicialComplex::from_facets(new_labels, facets)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<u32> {
        self.index.get(label).copied()
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn facet_labels(&self, i: usize) -> Vec<&str> {
        self.facets[i].iter().map(|&v| self.label(v)).collect()
    }

    pub fn dim(&self) -> usize {
        self.facets.iter().map(|f| f.len() - 1).max().unwrap_or(0)
    }

    /// True when `face` (sorted) is contained in some facet.
    pub fn is_face(&self, face: &[u32]) -> bool {
        !face.is_empty() && self.facets.iter().any(|f| is_subset_u32(face, f))
    }

    /// Every nonempty face, produced by walking the boundary lattice down
    /// from the facets. Output sorted by (dimension, lexicographic).
    pub fn all_faces(&self) -> Vec<Vec<u32>> {
        let mut seen: HashSet<Vec<u32>> = HashSet::with_capacity(self.facets.len() * 4);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for f in &self.facets {
            if seen.insert(f.clone()) {
                queue.push(f.clone());
            }
        }
        while let Some(f) = queue.pop() {
            if f.len() > 1 {
                for i in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(i);
                    if seen.insert(sub.clone()) {
                        queue.push(sub);
                    }
                }
            }
        }
        let mut faces: Vec<Vec<u32>> = seen.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        faces
    }

    /// Face counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.dim() + 1];
        for face in self.all_faces() {
            f[face.len() - 1] += 1;
        }
        f
    }

    /// Canonical label for a face: member labels sorted lexicographically.
    pub fn face_label(&self, face: &[u32]) -> String {
        let mut ls: Vec<&str> = face.iter().map(|&v| self.label(v)).collect();
        ls.sort_unstable();
        format!("{{{}}}", ls.join(","))
    }

    /// The face poset: nonempty faces ordered by reversed inclusion
    /// (`F1 <= F2` iff `F1` contains `F2`).
    pub fn face_poset(&self) -> Result<Poset, PosetError> {
        let faces = self.all_faces();
        if faces.is_empty() {
            return Err(PosetError::EmptyComplex);
        }
        let labels: Vec<String> = faces.iter().map(|f| self.face_label(f)).collect();
        Poset::from_closed_relation(labels, |a, b| is_subset_u32(&faces[b], &faces[a]))
    }

    /// The face poset ordered by inclusion (`F1 <= F2` iff `F1` is a subset
    /// of `F2`), used where face lattices act as semilattices.
    pub fn face_poset_by_inclusion(&self) -> Result<Poset, PosetError> {
        let faces = self.all_faces();
        if faces.is_empty() {
            return Err(PosetError::EmptyComplex);
        }
        let labels: Vec<String> = faces.iter().map(|f| self.face_label(f)).collect();
        Poset::from_closed_relation(labels, |a, b| is_subset_u32(&faces[a], &faces[b]))
    }

    /// First barycentric subdivision: the order complex of the face poset.
    /// Vertex labels are the face labels of `self`.
    pub fn barycentric_subdivision(&self) -> Result<SimplicialComplex, PosetError> {
        self.face_poset()?.order_complex()
    }

    /// Canonical form: vertices renamed to their rank in sorted label order,
    /// facets re-indexed and sorted. Two complexes are "the same labelled
    /// complex" when their canonical forms agree.
    pub fn canonical_form(&self) -> (Vec<String>, Vec<Vec<u32>>) {
        let mut order: Vec<u32> = (0..self.labels.len() as u32).collect();
        order.sort_by(|&a, &b| self.labels[a as usize].cmp(&self.labels[b as usize]));
        let mut rank = vec![0u32; self.labels.len()];
        for (r, &v) in order.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        let labels: Vec<String> = order
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect();
        let mut facets: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|&v| rank[v as usize]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        facets.sort();
        (labels, facets)
    }

    /// Labelled isomorphism after canonical relabelling.
    pub fn is_isomorphic_labeled(&self, other: &SimplicialComplex) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

pub(crate) fn is_subset_u32(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}
