use std::collections::HashSet;

use poset_core::{complex_from_json, Poset, PosetError, SimplicialComplex};
use serde_json::Value;

use crate::Z2Error;

/// A simplicial complex with a simplicial involution on its vertices.
#[derive(Clone, Debug)]
pub struct Z2Complex {
    complex: SimplicialComplex,
    omega: Vec<u32>,
}

impl Z2Complex {
    /// Verifies that `omega` is an involution of the vertex set mapping
    /// faces to faces. For an involution it suffices that every facet image
    /// is again a facet.
    pub fn new(complex: SimplicialComplex, omega: Vec<u32>) -> Result<Z2Complex, Z2Error> {
        let n = complex.vertex_count();
        if omega.len() != n || omega.iter().any(|&v| v as usize >= n) {
            return Err(Z2Error::NotInvolution("vertex map is not total".into()));
        }
        for v in 0..n {
            if omega[omega[v] as usize] as usize != v {
                return Err(Z2Error::NotInvolution(complex.label(v as u32).to_string()));
            }
        }
        let facet_set: HashSet<&[u32]> = complex.facets().iter().map(|f| f.as_slice()).collect();
        for f in complex.facets() {
            let mut img: Vec<u32> = f.iter().map(|&v| omega[v as usize]).collect();
            img.sort_unstable();
            if !facet_set.contains(img.as_slice()) {
                return Err(Z2Error::NotSimplicial(complex.face_label(f)));
            }
        }
        Ok(Z2Complex { complex, omega })
    }

    pub fn identity_action(complex: SimplicialComplex) -> Z2Complex {
        let omega = (0..complex.vertex_count() as u32).collect();
        Z2Complex { complex, omega }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn omega(&self, v: u32) -> u32 {
        self.omega[v as usize]
    }

    pub fn omega_map(&self) -> &[u32] {
        &self.omega
    }

    /// Image of a face, sorted.
    pub fn apply_face(&self, face: &[u32]) -> Vec<u32> {
        let mut img: Vec<u32> = face.iter().map(|&v| self.omega[v as usize]).collect();
        img.sort_unstable();
        img
    }

    /// Faces fixed setwise by the involution.
    pub fn invariant_faces(&self) -> Vec<Vec<u32>> {
        self.complex
            .all_faces()
            .into_iter()
            .filter(|f| &self.apply_face(f) == f)
            .collect()
    }

    /// Simplicial model of the fixed set: the order complex of the poset of
    /// invariant faces under inclusion. `None` is the empty-complex marker
    /// (the action is free).
    pub fn fixed_point_complex(&self) -> Option<SimplicialComplex> {
        let inv = self.invariant_faces();
        if inv.is_empty() {
            return None;
        }
        let labels: Vec<String> = inv.iter().map(|f| self.complex.face_label(f)).collect();
        let poset = Poset::from_closed_relation(labels, |a, b| is_subset(&inv[a], &inv[b]))
            .expect("inclusion of faces is a partial order");
        Some(poset.order_complex().expect("nonempty"))
    }

    /// True exactly when no face is invariant.
    pub fn is_free(&self) -> bool {
        self.complex
            .all_faces()
            .iter()
            .all(|f| &self.apply_face(f) != f)
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
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

/// Loads a Z2-complex from JSON: the simplicial-complex format plus an
/// `involution` field, either the string "identity" or a label-to-label map.
pub fn z2complex_from_json(text: &str) -> Result<Z2Complex, Z2Error> {
    let complex = complex_from_json(text)?;
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Z2Error::Poset(PosetError::Parse(e.to_string())))?;
    let involution = value.get("involution").cloned().unwrap_or_else(|| {
        Value::String("identity".into())
    });
    let omega = parse_involution(&complex, &involution)?;
    Z2Complex::new(complex, omega)
}

fn parse_involution(complex: &SimplicialComplex, value: &Value) -> Result<Vec<u32>, Z2Error> {
    match value {
        Value::String(s) if s == "identity" => {
            Ok((0..complex.vertex_count() as u32).collect())
        }
        Value::Object(map) => {
            let mut omega: Vec<Option<u32>> = vec![None; complex.vertex_count()];
            let lookup = |l: &str| -> Result<u32, Z2Error> {
                complex
                    .index_of(l)
                    .ok_or_else(|| Z2Error::Poset(PosetError::UnknownLabel(l.to_string())))
            };
            for (from, to) in map {
                let to = to.as_str().ok_or_else(|| {
                    Z2Error::Poset(PosetError::Parse("involution values must be labels".into()))
                })?;
                let (i, j) = (lookup(from)?, lookup(to)?);
                omega[i as usize] = Some(j);
                // entries may list each orbit once; fill the mirror image
                if omega[j as usize].is_none() {
                    omega[j as usize] = Some(i);
                }
            }
            // unmentioned vertices are fixed
            Ok(omega
                .into_iter()
                .enumerate()
                .map(|(i, v)| v.unwrap_or(i as u32))
                .collect())
        }
        other => Err(Z2Error::Poset(PosetError::Parse(format!(
            "involution must be \"identity\" or a label map, got {other}"
        )))),
    }
}

/// Builds an involution vector from a label permutation map; unmentioned
/// vertices stay fixed.
pub fn involution_from_pairs(
    complex: &SimplicialComplex,
    pairs: &[(String, String)],
) -> Result<Vec<u32>, Z2Error> {
    let mut map = serde_json::Map::new();
    for (a, b) in pairs {
        map.insert(a.clone(), Value::String(b.clone()));
    }
    parse_involution(complex, &Value::Object(map))
}
