use std::collections::HashMap;

use crate::bitmat::BitMat;
use crate::{PosetError, SimplicialComplex, BOTTOM_LABEL};

/// A finite poset over opaque string labels. The relation is stored
/// reflexively and transitively closed over element indices.
#[derive(Clone)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    leq: BitMat,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.leq == other.leq
    }
}
impl Eq for Poset {}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poset({} elements)", self.labels.len())
    }
}

/// A chain in a poset, kept strictly increasing in the ambient order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    elems: Vec<usize>,
}

impl Chain {
    /// Sorts `elems` by the ambient order. Fails if two members are
    /// incomparable or equal.
    pub fn new(poset: &Poset, mut elems: Vec<usize>) -> Option<Chain> {
        elems.sort_unstable();
        elems.dedup();
        for i in 0..elems.len() {
            for j in i + 1..elems.len() {
                if !poset.comparable(elems[i], elems[j]) {
                    return None;
                }
            }
        }
        elems.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if poset.leq(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        Some(Chain { elems })
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn min(&self) -> usize {
        self.elems[0]
    }

    pub fn max(&self) -> usize {
        *self.elems.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

impl Poset {
    /// Builds a poset from labels and relation pairs `(a, b)` meaning
    /// `a <= b`. The input is closed reflexively and transitively; the
    /// closure is rejected if it violates antisymmetry.
    pub fn build(labels: Vec<String>, relations: &[(String, String)]) -> Result<Poset, PosetError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut leq = BitMat::new(labels.len());
        for (a, b) in relations {
            let i = *index
                .get(a)
                .ok_or_else(|| PosetError::UnknownLabel(a.clone()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| PosetError::UnknownLabel(b.clone()))?;
            leq.set(i, j);
        }
        leq.close();
        let poset = Poset { labels, index, leq };
        poset.check_antisymmetry()?;
        Ok(poset)
    }

    /// Builds from index pairs, closing the relation. Used by the derived
    /// constructions, which control their own labels.
    pub fn from_index_pairs(
        labels: Vec<String>,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Poset, PosetError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut leq = BitMat::new(labels.len());
        for (i, j) in pairs {
            leq.set(i, j);
        }
        leq.close();
        let poset = Poset { labels, index, leq };
        poset.check_antisymmetry()?;
        Ok(poset)
    }

    /// Builds from an already-closed relation given as a predicate; skips the
    /// Warshall pass. The caller must supply a partial order.
    pub fn from_closed_relation(
        labels: Vec<String>,
        rel: impl Fn(usize, usize) -> bool,
    ) -> Result<Poset, PosetError> {
        let n = labels.len();
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let mut leq = BitMat::new(n);
        for i in 0..n {
            leq.set(i, i);
            for j in 0..n {
                if i != j && rel(i, j) {
                    leq.set(i, j);
                }
            }
        }
        let poset = Poset { labels, index, leq };
        poset.check_antisymmetry()?;
        debug_assert!(poset.is_transitive());
        Ok(poset)
    }

    pub fn empty() -> Poset {
        Poset {
            labels: Vec::new(),
            index: HashMap::new(),
            leq: BitMat::new(0),
        }
    }

    fn check_antisymmetry(&self) -> Result<(), PosetError> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.leq.get(i, j) && self.leq.get(j, i) {
                    return Err(PosetError::CycleDetected(
                        self.labels[i].clone(),
                        self.labels[j].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    fn is_transitive(&self) -> bool {
        let n = self.len();
        for i in 0..n {
            for j in 0..n {
                if self.leq.get(i, j) {
                    for k in 0..n {
                        if self.leq.get(j, k) && !self.leq.get(i, k) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    #[inline]
    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j) || self.leq.get(j, i)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(j, i)))
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(i, j)))
            .collect()
    }

    /// The unique minimum, if the poset has one.
    pub fn minimum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
    }

    pub fn maximum(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
    }

    /// Cover pairs `(i, j)` with `i < j` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Per-element comparability rows as bitsets.
    fn comparability_rows(&self) -> (usize, Vec<u64>) {
        let n = self.len();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for i in 0..n {
            for j in 0..n {
                if self.comparable(i, j) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        (words, rows)
    }

    /// Every nonempty chain, each as its set of element indices in
    /// ascending index order. Each chain set appears exactly once.
    pub fn chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let (words, comp) = self.comparability_rows();
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        // candidate mask restricted to indices > last and comparable to all of cur
        fn extend(
            poset: &Poset,
            words: usize,
            comp: &[u64],
            cur: &mut Vec<usize>,
            cand: &[u64],
            out: &mut Vec<Vec<usize>>,
        ) {
            let n = poset.len();
            let mut j = 0;
            for w in 0..words {
                let mut bits = cand[w];
                while bits != 0 {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    j = w * 64 + tz;
                    if j >= n {
                        break;
                    }
                    cur.push(j);
                    out.push(cur.clone());
                    // next candidates: > j, comparable to j, and in cand
                    let mut next = vec![0u64; words];
                    for w2 in 0..words {
                        next[w2] = cand[w2] & comp[j * words + w2];
                    }
                    // clear bits <= j
                    let wj = j / 64;
                    for item in next.iter_mut().take(wj) {
                        *item = 0;
                    }
                    if (j % 64) < 63 {
                        next[wj] &= !((1u64 << ((j % 64) + 1)) - 1);
                    } else {
                        next[wj] = 0;
                    }
                    extend(poset, words, comp, cur, &next, out);
                    cur.pop();
                }
            }
            let _ = j;
        }
        let mut all = vec![0u64; words];
        for i in 0..n {
            all[i / 64] |= 1 << (i % 64);
        }
        extend(self, words, &comp, &mut cur, &all, &mut out);
        out
    }

    /// Counts nonempty chains, giving up once the count exceeds `cap`.
    /// Returns `None` when over the cap.
    pub fn count_chains_capped(&self, cap: usize) -> Option<usize> {
        let n = self.len();
        let (words, comp) = self.comparability_rows();
        fn walk(
            poset: &Poset,
            words: usize,
            comp: &[u64],
            cand: &[u64],
            count: &mut usize,
            cap: usize,
        ) -> bool {
            let n = poset.len();
            for w in 0..words {
                let mut bits = cand[w];
                while bits != 0 {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let j = w * 64 + tz;
                    if j >= n {
                        break;
                    }
                    *count += 1;
                    if *count > cap {
                        return false;
                    }
                    let mut next = vec![0u64; words];
                    for w2 in 0..words {
                        next[w2] = cand[w2] & comp[j * words + w2];
                    }
                    let wj = j / 64;
                    for item in next.iter_mut().take(wj) {
                        *item = 0;
                    }
                    if (j % 64) < 63 {
                        next[wj] &= !((1u64 << ((j % 64) + 1)) - 1);
                    } else {
                        next[wj] = 0;
                    }
                    if !walk(poset, words, comp, &next, count, cap) {
                        return false;
                    }
                }
            }
            true
        }
        let mut all = vec![0u64; words];
        for i in 0..n {
            all[i / 64] |= 1 << (i % 64);
        }
        let mut count = 0usize;
        if walk(self, words, &comp, &all, &mut count, cap) {
            Some(count)
        } else {
            None
        }
    }

    /// Maximal chains, via cover DFS from the minimal elements. Each is
    /// returned in increasing order.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut covers_up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, j) in self.covers() {
            covers_up[i].push(j);
        }
        let mut out = Vec::new();
        let mut path = Vec::new();
        fn dfs(covers_up: &[Vec<usize>], x: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            path.push(x);
            if covers_up[x].is_empty() {
                out.push(path.clone());
            } else {
                for &y in &covers_up[x] {
                    dfs(covers_up, y, path, out);
                }
            }
            path.pop();
        }
        for m in self.minimal_elements() {
            dfs(&covers_up, m, &mut path, &mut out);
        }
        out
    }

    /// The order complex: vertices are the elements, faces are the chains,
    /// facets the maximal chains.
    pub fn order_complex(&self) -> Result<SimplicialComplex, PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let facets = self
            .maximal_chains()
            .into_iter()
            .map(|c| c.into_iter().map(|i| i as u32).collect())
            .collect();
        SimplicialComplex::from_facets(self.labels.clone(), facets)
    }

    /// Canonical label for a set of elements: member labels sorted
    /// lexicographically, wrapped in braces.
    pub fn set_label(&self, elems: &[usize]) -> String {
        let mut ls: Vec<&str> = elems.iter().map(|&i| self.label(i)).collect();
        ls.sort_unstable();
        format!("{{{}}}", ls.join(","))
    }

    /// The chain poset: elements are the nonempty chains, and A precedes B
    /// exactly when B is a subchain of A (refinement goes down).
    pub fn chain_poset(&self) -> Result<Poset, PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let chains = self.chains();
        let labels: Vec<String> = chains.iter().map(|c| self.set_label(c)).collect();
        Poset::from_closed_relation(labels, |a, b| is_subset(&chains[b], &chains[a]))
    }

    /// All intervals `(x, y)` with `x <= y`, in deterministic order.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.leq(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The interval poset: `(x, y) <= (x', y')` iff `x <= x' <= y' <= y`
    /// (reversed containment of intervals).
    pub fn interval_poset(&self) -> Result<Poset, PosetError> {
        if self.is_empty() {
            return Err(PosetError::EmptyPoset);
        }
        let ivs = self.intervals();
        let labels: Vec<String> = ivs
            .iter()
            .map(|&(x, y)| format!("({},{})", self.label(x), self.label(y)))
            .collect();
        Poset::from_closed_relation(labels, |a, b| {
            let (x, y) = ivs[a];
            let (x2, y2) = ivs[b];
            self.leq(x, x2) && self.leq(y2, y)
        })
    }

    /// Adjoins a fresh minimum labelled `_bot`.
    pub fn add_bottom(&self) -> Result<Poset, PosetError> {
        if self.index.contains_key(BOTTOM_LABEL) {
            return Err(PosetError::ReservedLabel(BOTTOM_LABEL.to_string()));
        }
        let mut labels = self.labels.clone();
        labels.push(BOTTOM_LABEL.to_string());
        let bot = self.len();
        let n = self.len();
        Poset::from_closed_relation(labels, |i, j| {
            if i == bot {
                true
            } else if j == bot {
                false
            } else {
                debug_assert!(i < n && j < n);
                self.leq(i, j)
            }
        })
    }

    /// Induced subposet on `keep` (indices into self, in the given order).
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let labels: Vec<String> = keep.iter().map(|&i| self.labels[i].clone()).collect();
        Poset::from_closed_relation(labels, |a, b| self.leq(keep[a], keep[b]))
            .expect("induced subposet of a poset is a poset")
    }

    /// True when every element of `self` appears in `other` with exactly the
    /// same order relation (label matching).
    pub fn is_induced_subposet_of(&self, other: &Poset) -> bool {
        let mut image = Vec::with_capacity(self.len());
        for l in &self.labels {
            match other.index_of(l) {
                Some(i) => image.push(i),
                None => return false,
            }
        }
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.leq(a, b) != other.leq(image[a], image[b]) {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // both sorted ascending
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
