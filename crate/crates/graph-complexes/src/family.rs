use crate::{Graph, GraphError};

/// A family of distinct nonempty subsets of a ground set [n], stored as
/// bitmasks.
#[derive(Clone, Debug)]
pub struct SetFamily {
    ground: usize,
    members: Vec<u64>,
}

impl SetFamily {
    pub fn new(ground: usize, members: Vec<u64>) -> Result<SetFamily, GraphError> {
        if ground > 64 {
            return Err(GraphError::BudgetExceeded(format!(
                "ground set of size {ground}"
            )));
        }
        let full = if ground == 64 {
            u64::MAX
        } else {
            (1u64 << ground) - 1
        };
        let mut seen = std::collections::HashSet::new();
        for &m in &members {
            if m == 0 {
                return Err(GraphError::Parse("empty member set".into()));
            }
            if m & !full != 0 {
                return Err(GraphError::GroundMismatch(format!(
                    "member {m:#b} leaves the ground set [{ground}]"
                )));
            }
            if !seen.insert(m) {
                return Err(GraphError::Parse("duplicate member set".into()));
            }
        }
        Ok(SetFamily { ground, members })
    }

    /// All k-element subsets of [n], in ascending mask order.
    pub fn k_subsets(n: usize, k: usize) -> Result<SetFamily, GraphError> {
        if k == 0 || k > n {
            return Err(GraphError::TooSmall(format!("k={k} of n={n}")));
        }
        let mut members = Vec::new();
        for mask in 1u64..(1 << n) {
            if mask.count_ones() as usize == k {
                members.push(mask);
            }
        }
        SetFamily::new(n, members)
    }

    pub fn singletons(n: usize) -> Result<SetFamily, GraphError> {
        SetFamily::k_subsets(n, 1)
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn member_label(&self, m: u64) -> String {
        let elems: Vec<String> = (0..self.ground)
            .filter(|&i| m >> i & 1 == 1)
            .map(|i| (i + 1).to_string())
            .collect();
        format!("{{{}}}", elems.join(","))
    }

    /// Label for a subset of the ground set (not necessarily a member).
    pub fn ground_subset_label(&self, m: u64) -> String {
        self.member_label(m)
    }
}

/// The Kneser graph of a family: members are vertices, disjoint members are
/// adjacent.
pub fn kneser_graph(family: &SetFamily) -> Result<Graph, GraphError> {
    if family.members().is_empty() {
        return Err(GraphError::EmptyFamily);
    }
    let labels: Vec<String> = family
        .members()
        .iter()
        .map(|&m| family.member_label(m))
        .collect();
    let mut pairs = Vec::new();
    for i in 0..family.members().len() {
        for j in i + 1..family.members().len() {
            if family.members()[i] & family.members()[j] == 0 {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(labels, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kneser_4_2_is_perfect_matching() {
        let f = SetFamily::k_subsets(4, 2).unwrap();
        let g = kneser_graph(&f).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 3);
        assert!((0..6).all(|v| g.neighbors_mask(v).count_ones() == 1));
    }

    #[test]
    fn kneser_5_2_is_petersen() {
        let f = SetFamily::k_subsets(5, 2).unwrap();
        let g = kneser_graph(&f).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.neighbors_mask(v).count_ones() == 3));
        assert!(g.is_connected());
    }

    #[test]
    fn kneser_of_one_singleton_is_isolated_vertex() {
        let f = SetFamily::new(1, vec![0b1]).unwrap();
        let g = kneser_graph(&f).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn empty_family_rejected() {
        let f = SetFamily::new(3, vec![]).unwrap();
        assert!(matches!(kneser_graph(&f), Err(GraphError::EmptyFamily)));
    }
}
