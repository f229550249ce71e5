use serde::Serialize;

/// Reduced GF(2) Betti numbers, stored with trailing zeros trimmed (they are
/// semantically present up to the complex dimension). The marker variant
/// stands in for the homology of the unrepresentable empty complex.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct BettiVector {
    reduced: Vec<usize>,
    empty: bool,
}

impl BettiVector {
    pub fn from_reduced(mut reduced: Vec<usize>) -> Self {
        while reduced.last() == Some(&0) {
            reduced.pop();
        }
        BettiVector {
            reduced,
            empty: false,
        }
    }

    pub fn empty_marker() -> Self {
        BettiVector {
            reduced: Vec::new(),
            empty: true,
        }
    }

    /// The reduced Betti vector of a d-sphere.
    pub fn sphere(d: usize) -> Self {
        let mut v = vec![0; d + 1];
        v[d] = 1;
        BettiVector::from_reduced(v)
    }

    pub fn point() -> Self {
        BettiVector::from_reduced(Vec::new())
    }

    pub fn reduced(&self) -> &[usize] {
        &self.reduced
    }

    pub fn get(&self, k: usize) -> usize {
        self.reduced.get(k).copied().unwrap_or(0)
    }

    pub fn is_empty_marker(&self) -> bool {
        self.empty
    }

    /// All reduced Betti numbers vanish (and the complex is nonempty).
    pub fn is_homology_point(&self) -> bool {
        !self.empty && self.reduced.is_empty()
    }

    /// Betti vector of the suspension: everything shifts up one degree.
    pub fn suspension_shift(&self) -> BettiVector {
        assert!(!self.empty, "suspension shift of the empty marker");
        if self.reduced.is_empty() {
            return BettiVector::point();
        }
        let mut v = Vec::with_capacity(self.reduced.len() + 1);
        v.push(0);
        v.extend_from_slice(&self.reduced);
        BettiVector::from_reduced(v)
    }

    /// Render as a JSON-friendly value: an array, or the string "empty".
    pub fn to_json(&self) -> serde_json::Value {
        if self.empty {
            serde_json::Value::String("empty".into())
        } else {
            serde_json::json!(self.display_vec())
        }
    }

    fn display_vec(&self) -> Vec<usize> {
        if self.reduced.is_empty() {
            vec![0]
        } else {
            self.reduced.clone()
        }
    }
}

impl std::fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl std::fmt::Display for BettiVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.empty {
            return write!(f, "empty");
        }
        let strs: Vec<String> = self.display_vec().iter().map(|b| b.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}
