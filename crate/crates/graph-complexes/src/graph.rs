use std::collections::HashMap;

use crate::GraphError;

/// A simple undirected graph on at most 64 labelled vertices, with
/// adjacency stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(labels: Vec<String>, edge_pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if labels.len() > 64 {
            return Err(GraphError::BudgetExceeded(format!(
                "{} vertices (bitmask graphs cap at 64)",
                labels.len()
            )));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::Poset(poset_core::PosetError::DuplicateLabel(
                    l.clone(),
                )));
            }
        }
        let n = labels.len();
        let mut adj = vec![0u64; n];
        let mut edges = Vec::new();
        for &(u, v) in edge_pairs {
            if u >= n || v >= n {
                return Err(GraphError::UnknownVertex(format!("#{}", u.max(v))));
            }
            if u == v {
                return Err(GraphError::Loop(labels[u].clone()));
            }
            if adj[u] >> v & 1 == 0 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges.sort_unstable();
        Ok(Graph {
            labels,
            index,
            adj,
            edges,
        })
    }

    pub fn by_labels(labels: Vec<String>, edges: &[(String, String)]) -> Result<Graph, GraphError> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            index.insert(l.clone(), i);
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let u = *index
                .get(a)
                .ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let v = *index
                .get(b)
                .ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            pairs.push((u, v));
        }
        Graph::new(labels, &pairs)
    }

    pub fn complete(n: usize) -> Graph {
        let labels = (1..=n).map(|i| i.to_string()).collect();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                pairs.push((i, j));
            }
        }
        Graph::new(labels, &pairs).expect("complete graph is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn full_mask(&self) -> u64 {
        if self.labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    /// Common neighbors of a vertex set; every vertex for the empty set.
    pub fn common_neighbors(&self, set: u64) -> u64 {
        let mut cn = self.full_mask();
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cn &= self.adj[v];
        }
        cn
    }

    pub fn is_independent(&self, set: u64) -> bool {
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & set != 0 {
                return false;
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.full_mask()
    }

    /// Closed star of a vertex: the vertex and its neighbors.
    pub fn star_mask(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    /// The induced subgraph on the vertices of `keep`, in mask order.
    pub fn induced_subgraph(&self, keep: u64) -> Graph {
        let verts: Vec<usize> = (0..self.vertex_count())
            .filter(|&v| keep >> v & 1 == 1)
            .collect();
        let labels: Vec<String> = verts.iter().map(|&v| self.labels[v].clone()).collect();
        let pos: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep >> u & 1 == 1 && keep >> v & 1 == 1)
            .map(|&(u, v)| (pos[&u], pos[&v]))
            .collect();
        Graph::new(labels, &pairs).expect("induced subgraph is simple")
    }

    pub fn delete_vertices(&self, remove: u64) -> Graph {
        self.induced_subgraph(self.full_mask() & !remove)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::UnknownEdge(
                self.labels[u].clone(),
                self.labels[v].clone(),
            ));
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| (a, b) != (u.min(v), u.max(v)))
            .collect();
        Graph::new(self.labels.clone(), &pairs)
    }

    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        if perm.len() != self.vertex_count() {
            return false;
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || seen[p] {
                return false;
            }
            seen[p] = true;
        }
        for u in 0..self.vertex_count() {
            for v in 0..self.vertex_count() {
                if self.has_edge(u, v) != self.has_edge(perm[u], perm[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// Edge bitmask under the standard pair indexing, used for canonical
    /// forms of small graphs.
    fn edge_code(&self, perm: &[usize]) -> u64 {
        let n = self.vertex_count();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.has_edge(perm[i], perm[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Minimum edge code over all vertex permutations. Only sensible for
    /// small graphs (the corpus uses n <= 6).
    pub fn canonical_code(&self) -> u64 {
        let n = self.vertex_count();
        assert!(n <= 8, "canonical codes are for small corpus graphs");
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best = self.edge_code(&perm);
        // Heap's algorithm
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.min(self.edge_code(&perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ind::cycle_graph;

    #[test]
    fn cn_on_c5() {
        let c5 = cycle_graph(5).unwrap();
        // vertices labelled 1..5, indices 0..4
        assert_eq!(c5.common_neighbors(0b00001), 0b10010); // CN({1}) = {2,5}
        assert_eq!(c5.common_neighbors(0b10010), 0b00001); // CN({2,5}) = {1}
        assert_eq!(c5.common_neighbors(0), c5.full_mask());
    }

    #[test]
    fn loops_rejected() {
        let err = Graph::new(vec!["a".into()], &[(0, 0)]).unwrap_err();
        assert!(matches!(err, GraphError::Loop(_)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(vec!["a".into(), "b".into()], &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        let g = Graph::new(vec!["a".into(), "b".into()], &[]).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn canonical_code_identifies_isomorphs() {
        // path 1-2-3 in two labellings
        let p1 = Graph::new(vec!["1".into(), "2".into(), "3".into()], &[(0, 1), (1, 2)]).unwrap();
        let p2 = Graph::new(vec!["1".into(), "2".into(), "3".into()], &[(0, 2), (1, 2)]).unwrap();
        let tri = Graph::complete(3);
        assert_eq!(p1.canonical_code(), p2.canonical_code());
        assert_ne!(p1.canonical_code(), tri.canonical_code());
    }
}
