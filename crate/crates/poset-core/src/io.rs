//! JSON ingestion for simplicial complexes.
//!
//! Format: `{"vertices": [..strings..], "facets": [[..indices or labels..]]}`.
//! Facet entries may be vertex indices or vertex labels; the loader
//! normalises to sorted label lists. Vertices listed but absent from every
//! facet become isolated points.

use serde::Deserialize;
use serde_json::Value;

use crate::{PosetError, SimplicialComplex};

#[derive(Deserialize)]
struct ComplexFile {
    vertices: Vec<String>,
    #[serde(default)]
    facets: Vec<Vec<Value>>,
}

pub fn complex_from_json(text: &str) -> Result<SimplicialComplex, PosetError> {
    let file: ComplexFile =
        serde_json::from_str(text).map_err(|e| PosetError::Parse(e.to_string()))?;
    let mut faces = Vec::with_capacity(file.facets.len());
    for raw in &file.facets {
        let mut face = Vec::with_capacity(raw.len());
        for entry in raw {
            let v = match entry {
                Value::Number(n) => {
                    let i = n
                        .as_u64()
                        .ok_or_else(|| PosetError::Parse(format!("bad vertex index {n}")))?;
                    if i as usize >= file.vertices.len() {
                        return Err(PosetError::Parse(format!("vertex index {i} out of range")));
                    }
                    i as u32
                }
                Value::String(s) => file
                    .vertices
                    .iter()
                    .position(|l| l == s)
                    .map(|i| i as u32)
                    .ok_or_else(|| PosetError::UnknownLabel(s.clone()))?,
                other => {
                    return Err(PosetError::Parse(format!(
                        "facet entry must be an index or label, got {other}"
                    )))
                }
            };
            face.push(v);
        }
        faces.push(face);
    }
    SimplicialComplex::new(file.vertices, faces)
}

pub fn complex_to_json(k: &SimplicialComplex) -> String {
    let facets: Vec<Vec<&str>> = (0..k.facets().len())
        .map(|i| {
            let mut ls = k.facet_labels(i);
            ls.sort_unstable();
            ls
        })
        .collect();
    serde_json::json!({
        "vertices": k.labels(),
        "facets": facets,
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_by_label_and_index() {
        let k1 = complex_from_json(r#"{"vertices":["a","b","c"],"facets":[["a","b"],[1,2]]}"#)
            .unwrap();
        assert_eq!(k1.facets().len(), 2);
        let k2 = complex_from_json(&complex_to_json(&k1)).unwrap();
        assert!(k1.is_isomorphic_labeled(&k2));
    }

    #[test]
    fn rejects_unknown_label() {
        let err = complex_from_json(r#"{"vertices":["a"],"facets":[["z"]]}"#).unwrap_err();
        assert!(matches!(err, PosetError::UnknownLabel(_)));
    }

    #[test]
    fn rejects_empty_vertex_list() {
        assert!(complex_from_json(r#"{"vertices":[],"facets":[]}"#).is_err());
    }
}
