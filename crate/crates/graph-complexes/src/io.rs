//! File ingestion: whitespace edge lists for graphs, JSON for set families
//! and involutions.

use serde::Deserialize;
use serde_json::Value;

use crate::{Graph, GraphError, SetFamily};

/// Parses a whitespace edge list: one `u v` pair per line, `#` comments,
/// optional `p <n> <m>` header. With a numeric header, vertices are 1..n
/// (isolated vertices included); otherwise the vertex set is inferred from
/// the tokens, sorted numerically when every token is a number.
pub fn graph_from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut declared: Option<(usize, usize)> = None;
    let mut edges: Vec<(String, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", n, m] => {
                let n = n
                    .parse()
                    .map_err(|_| GraphError::Parse(format!("bad header on line {}", lineno + 1)))?;
                let m = m
                    .parse()
                    .map_err(|_| GraphError::Parse(format!("bad header on line {}", lineno + 1)))?;
                declared = Some((n, m));
            }
            [u, v] => edges.push((u.to_string(), v.to_string())),
            _ => {
                return Err(GraphError::Parse(format!(
                    "line {}: expected `u v`, got `{line}`",
                    lineno + 1
                )))
            }
        }
    }
    let labels: Vec<String> = match declared {
        Some((n, _)) => (1..=n).map(|i| i.to_string()).collect(),
        None => {
            let mut ls: Vec<String> = edges
                .iter()
                .flat_map(|(u, v)| [u.clone(), v.clone()])
                .collect();
            ls.sort_by(|a, b| match (a.parse::<u64>(), b.parse::<u64>()) {
                (Ok(x), Ok(y)) => x.cmp(&y),
                _ => a.cmp(b),
            });
            ls.dedup();
            ls
        }
    };
    let g = Graph::by_labels(labels, &edges)?;
    if let Some((_, m)) = declared {
        if g.edge_count() != m {
            return Err(GraphError::Parse(format!(
                "header declares {m} edges, file has {}",
                g.edge_count()
            )));
        }
    }
    Ok(g)
}

#[derive(Deserialize)]
struct FamilyFile {
    ground: usize,
    members: Vec<Vec<usize>>,
}

/// Parses `{"ground": n, "members": [[1,2],[3],...]}` with 1-based member
/// entries.
pub fn set_family_from_json(text: &str) -> Result<SetFamily, GraphError> {
    let file: FamilyFile =
        serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
    if file.ground == 0 || file.ground > 64 {
        return Err(GraphError::Parse(format!("bad ground size {}", file.ground)));
    }
    let mut members = Vec::with_capacity(file.members.len());
    for raw in &file.members {
        let mut mask = 0u64;
        for &e in raw {
            if e == 0 || e > file.ground {
                return Err(GraphError::GroundMismatch(format!(
                    "member entry {e} outside 1..={}",
                    file.ground
                )));
            }
            mask |= 1 << (e - 1);
        }
        members.push(mask);
    }
    SetFamily::new(file.ground, members)
}

/// Parses an involution spec against a graph: the keyword "reverse"
/// (i -> n+1-i over numeric labels), "identity", or an explicit label map.
pub fn involution_from_json(g: &Graph, value: &Value) -> Result<Vec<usize>, GraphError> {
    let n = g.vertex_count();
    match value {
        Value::String(s) if s == "identity" => Ok((0..n).collect()),
        Value::String(s) if s == "reverse" => {
            let mut perm = vec![0usize; n];
            for v in 0..n {
                let i: usize = g
                    .label(v)
                    .parse()
                    .map_err(|_| GraphError::Parse("reverse needs numeric labels".into()))?;
                let target = n + 1 - i;
                perm[v] = g
                    .index_of(&target.to_string())
                    .ok_or_else(|| GraphError::UnknownVertex(target.to_string()))?;
            }
            Ok(perm)
        }
        Value::Object(map) => {
            let mut perm: Vec<Option<usize>> = vec![None; n];
            for (from, to) in map {
                let to = to
                    .as_str()
                    .ok_or_else(|| GraphError::Parse("involution values must be labels".into()))?;
                let i = g
                    .index_of(from)
                    .ok_or_else(|| GraphError::UnknownVertex(from.clone()))?;
                let j = g
                    .index_of(to)
                    .ok_or_else(|| GraphError::UnknownVertex(to.to_string()))?;
                perm[i] = Some(j);
                if perm[j].is_none() {
                    perm[j] = Some(i);
                }
            }
            Ok(perm
                .into_iter()
                .enumerate()
                .map(|(i, p)| p.unwrap_or(i))
                .collect())
        }
        other => Err(GraphError::Parse(format!(
            "involution must be \"reverse\", \"identity\" or a label map, got {other}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_edge_list_with_header_and_comments() {
        let g = graph_from_edge_list("# a path\np 4 3\n1 2\n2 3\n3 4\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn parses_edge_list_without_header() {
        let g = graph_from_edge_list("2 10\n1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        // numeric ordering puts "10" last
        assert_eq!(g.labels(), &["1", "2", "10"]);
    }

    #[test]
    fn header_edge_count_enforced() {
        assert!(graph_from_edge_list("p 2 5\n1 2\n").is_err());
    }

    #[test]
    fn parses_set_family() {
        let f = set_family_from_json(r#"{"ground": 4, "members": [[1,2],[3,4]]}"#).unwrap();
        assert_eq!(f.members(), &[0b0011, 0b1100]);
        assert!(set_family_from_json(r#"{"ground": 2, "members": [[5]]}"#).is_err());
    }

    #[test]
    fn reverse_involution() {
        let g = crate::ind::cycle_graph(5).unwrap();
        let perm = involution_from_json(&g, &Value::String("reverse".into())).unwrap();
        assert_eq!(perm, vec![4, 3, 2, 1, 0]);
    }
}
