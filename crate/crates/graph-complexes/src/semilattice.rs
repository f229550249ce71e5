use poset_core::Poset;
use z2_core::Z2Complex;

use crate::{Graph, GraphError};

/// A point of the bounded completion L-hat: the adjoined bottom or top, or
/// an element of the proper part L.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LatPoint {
    Bottom,
    El(usize),
    Top,
}

/// A semilattice (the proper part of a finite lattice) carrying a monotone
/// fixed-point-free involution. Construction validates all three
/// conditions.
#[derive(Clone, Debug)]
pub struct FreeISemilattice {
    poset: Poset,
    c: Vec<usize>,
}

impl FreeISemilattice {
    pub fn new(poset: Poset, c: Vec<usize>) -> Result<FreeISemilattice, GraphError> {
        let n = poset.len();
        if c.len() != n || c.iter().any(|&i| i >= n) {
            return Err(GraphError::NotInvolution("map is not total".into()));
        }
        for x in 0..n {
            if c[c[x]] != x {
                return Err(GraphError::NotInvolution(poset.label(x).to_string()));
            }
        }
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) && !poset.leq(c[x], c[y]) {
                    return Err(GraphError::NotMonotone(format!(
                        "({}, {})",
                        poset.label(x),
                        poset.label(y)
                    )));
                }
            }
        }
        for x in 0..n {
            if c[x] == x {
                return Err(GraphError::NotFree(poset.label(x).to_string()));
            }
        }
        // bounded pairs need unique least upper / greatest lower bounds
        for x in 0..n {
            for y in x + 1..n {
                let ubs: Vec<usize> = (0..n)
                    .filter(|&v| poset.leq(x, v) && poset.leq(y, v))
                    .collect();
                if !ubs.is_empty() && !ubs.iter().any(|&m| ubs.iter().all(|&u| poset.leq(m, u))) {
                    return Err(GraphError::NotSemilattice(format!(
                        "{{{}, {}}} is bounded above but has no join",
                        poset.label(x),
                        poset.label(y)
                    )));
                }
                let lbs: Vec<usize> = (0..n)
                    .filter(|&v| poset.leq(v, x) && poset.leq(v, y))
                    .collect();
                if !lbs.is_empty() && !lbs.iter().any(|&m| lbs.iter().all(|&l| poset.leq(l, m))) {
                    return Err(GraphError::NotSemilattice(format!(
                        "{{{}, {}}} is bounded below but has no meet",
                        poset.label(x),
                        poset.label(y)
                    )));
                }
            }
        }
        Ok(FreeISemilattice { poset, c })
    }

    /// The face semilattice of a free Z2-complex: faces under inclusion with
    /// the induced (monotone, fixed-point-free) involution.
    pub fn from_z2complex(k: &Z2Complex) -> Result<FreeISemilattice, GraphError> {
        let faces = k.complex().all_faces();
        if let Some(f) = faces.iter().find(|f| &k.apply_face(f) == *f) {
            return Err(GraphError::NotFree(k.complex().face_label(f)));
        }
        let poset = k.complex().face_poset_by_inclusion()?;
        let index: std::collections::HashMap<String, usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (k.complex().face_label(f), i))
            .collect();
        let c: Vec<usize> = faces
            .iter()
            .map(|f| index[&k.complex().face_label(&k.apply_face(f))])
            .collect();
        FreeISemilattice::new(poset, c)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn c(&self, x: usize) -> usize {
        self.c[x]
    }

    pub fn c_point(&self, p: LatPoint) -> LatPoint {
        match p {
            LatPoint::Bottom => LatPoint::Bottom,
            LatPoint::Top => LatPoint::Top,
            LatPoint::El(x) => LatPoint::El(self.c[x]),
        }
    }

    pub fn lat_leq(&self, a: LatPoint, b: LatPoint) -> bool {
        match (a, b) {
            (LatPoint::Bottom, _) | (_, LatPoint::Top) => true,
            (LatPoint::El(x), LatPoint::El(y)) => self.poset.leq(x, y),
            (LatPoint::Top, LatPoint::El(_)) | (LatPoint::El(_), LatPoint::Bottom) => false,
            (LatPoint::Top, LatPoint::Bottom) => false,
        }
    }

    /// Greatest lower bound in L-hat.
    pub fn meet(&self, a: LatPoint, b: LatPoint) -> LatPoint {
        match (a, b) {
            (LatPoint::Bottom, _) | (_, LatPoint::Bottom) => LatPoint::Bottom,
            (LatPoint::Top, x) | (x, LatPoint::Top) => x,
            (LatPoint::El(x), LatPoint::El(y)) => {
                let lbs: Vec<usize> = (0..self.poset.len())
                    .filter(|&v| self.poset.leq(v, x) && self.poset.leq(v, y))
                    .collect();
                match lbs.iter().find(|&&m| lbs.iter().all(|&l| self.poset.leq(l, m))) {
                    Some(&m) => LatPoint::El(m),
                    None => LatPoint::Bottom,
                }
            }
        }
    }

    /// Least upper bound in L-hat.
    pub fn join(&self, a: LatPoint, b: LatPoint) -> LatPoint {
        match (a, b) {
            (LatPoint::Top, _) | (_, LatPoint::Top) => LatPoint::Top,
            (LatPoint::Bottom, x) | (x, LatPoint::Bottom) => x,
            (LatPoint::El(x), LatPoint::El(y)) => {
                let ubs: Vec<usize> = (0..self.poset.len())
                    .filter(|&v| self.poset.leq(x, v) && self.poset.leq(y, v))
                    .collect();
                match ubs.iter().find(|&&m| ubs.iter().all(|&u| self.poset.leq(m, u))) {
                    Some(&m) => LatPoint::El(m),
                    None => LatPoint::Top,
                }
            }
        }
    }

    /// The interval [lo, hi] taken in L (endpoints may be Bottom/Top).
    pub fn interval(&self, lo: LatPoint, hi: LatPoint) -> Vec<usize> {
        (0..self.poset.len())
            .filter(|&v| self.lat_leq(lo, LatPoint::El(v)) && self.lat_leq(LatPoint::El(v), hi))
            .collect()
    }

    pub fn point_label(&self, p: LatPoint) -> String {
        match p {
            LatPoint::Bottom => "_bot".into(),
            LatPoint::Top => "_top".into(),
            LatPoint::El(x) => self.poset.label(x).to_string(),
        }
    }

    /// Adjacency masks of the compatibility graph: x ~ y when y <= C(x) or
    /// x <= C(y); never reflexive because C is free.
    fn adjacency(&self) -> Vec<u64> {
        let n = self.poset.len();
        assert!(n <= 64);
        let mut adj = vec![0u64; n];
        for x in 0..n {
            for y in 0..n {
                if x != y && (self.poset.leq(y, self.c[x]) || self.poset.leq(x, self.c[y])) {
                    adj[x] |= 1 << y;
                }
            }
        }
        adj
    }

    /// Common compatibility neighbors of a set of elements.
    pub fn neighbors(&self, a: &[usize]) -> Vec<usize> {
        let adj = self.adjacency();
        let full = if self.poset.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.poset.len()) - 1
        };
        let mut cn = full;
        for &x in a {
            cn &= adj[x];
        }
        (0..self.poset.len()).filter(|&v| cn >> v & 1 == 1).collect()
    }
}

/// The compatibility graph of a free I-semilattice: elements are vertices,
/// adjacent when one is below the image of the other.
pub fn compatibility_graph(l: &FreeISemilattice) -> Result<Graph, GraphError> {
    let n = l.poset().len();
    if n > 64 {
        return Err(GraphError::BudgetExceeded(format!(
            "compatibility graph on {n} vertices"
        )));
    }
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if l.poset().leq(y, l.c(x)) || l.poset().leq(x, l.c(y)) {
                pairs.push((x, y));
            }
        }
    }
    Graph::new(l.poset().labels().to_vec(), &pairs)
}

/// Fatness: every strict three-element chain x < z < y admits an element of
/// [x, y] incomparable to the middle. Returns a witness chain on failure.
pub fn is_fat(poset: &Poset) -> (bool, Option<(String, String, String)>) {
    let n = poset.len();
    for x in 0..n {
        for z in 0..n {
            if !poset.lt(x, z) {
                continue;
            }
            for y in 0..n {
                if !poset.lt(z, y) {
                    continue;
                }
                let has_witness = (0..n).any(|w| {
                    poset.leq(x, w) && poset.leq(w, y) && !poset.comparable(w, z)
                });
                if !has_witness {
                    return (
                        false,
                        Some((
                            poset.label(x).to_string(),
                            poset.label(z).to_string(),
                            poset.label(y).to_string(),
                        )),
                    );
                }
            }
        }
    }
    (true, None)
}

/// The neighbor set of `a` in the compatibility graph, its decomposition as
/// a union of intervals along a chain in L-hat, the double neighbor set,
/// and the complementary-interval formula for it.
#[derive(Clone, Debug)]
pub struct NnClosure {
    pub neighbors: Vec<usize>,
    pub intervals: Vec<(LatPoint, LatPoint)>,
    pub nn_direct: Vec<usize>,
    pub nn_formula: Vec<usize>,
    pub matches: bool,
}

pub fn nn_closure(l: &FreeISemilattice, a: &[usize]) -> Result<NnClosure, GraphError> {
    let neighbors = l.neighbors(a);
    // incremental intersection of interval unions: N(empty) = L = [bot, top]
    let mut pieces: Vec<(LatPoint, LatPoint)> = vec![(LatPoint::Bottom, LatPoint::Top)];
    let mut sorted_a = a.to_vec();
    sorted_a.sort_unstable();
    sorted_a.dedup();
    for &x in &sorted_a {
        let c = LatPoint::El(l.c(x));
        let mut next = Vec::new();
        for &(lo, hi) in &pieces {
            let below = (lo, l.meet(hi, c));
            if !l.interval(below.0, below.1).is_empty() {
                next.push(below);
            }
            let above = (l.join(lo, c), hi);
            if !l.interval(above.0, above.1).is_empty() {
                next.push(above);
            }
        }
        pieces = canonicalize(l, next)?;
    }
    // the decomposition must reproduce the honest neighbor set (freeness
    // makes "comparable to every C(a)" coincide with adjacency, members of
    // A included)
    let mut union: Vec<usize> = pieces
        .iter()
        .flat_map(|&(lo, hi)| l.interval(lo, hi))
        .collect();
    union.sort_unstable();
    union.dedup();
    if union != neighbors {
        return Err(GraphError::DecompositionFailed(format!(
            "interval union {:?} differs from neighbor set {:?}",
            union, neighbors
        )));
    }
    // chain condition on the endpoints
    for w in pieces.windows(2) {
        let (_, hi) = w[0];
        let (lo2, _) = w[1];
        if !l.lat_leq(hi, lo2) {
            return Err(GraphError::DecompositionFailed(
                "interval endpoints do not lie on a chain".into(),
            ));
        }
    }
    for &(lo, hi) in &pieces {
        if !l.lat_leq(lo, hi) {
            return Err(GraphError::DecompositionFailed(
                "degenerate interval".into(),
            ));
        }
    }

    let nn_direct = l.neighbors(&neighbors);
    let nn_formula = if pieces.is_empty() {
        // N(A) empty: N(N(A)) = N(empty) = L
        l.interval(LatPoint::Bottom, LatPoint::Top)
    } else {
        let mut out: Vec<usize> = Vec::new();
        let k = pieces.len();
        out.extend(l.interval(LatPoint::Bottom, l.c_point(pieces[0].0)));
        for i in 0..k - 1 {
            out.extend(l.interval(l.c_point(pieces[i].1), l.c_point(pieces[i + 1].0)));
        }
        out.extend(l.interval(l.c_point(pieces[k - 1].1), LatPoint::Top));
        out.sort_unstable();
        out.dedup();
        out
    };
    let matches = nn_formula == nn_direct;
    Ok(NnClosure {
        neighbors,
        intervals: pieces,
        nn_direct,
        nn_formula,
        matches,
    })
}

/// Tightens endpoints to the meet/join of each piece, merges touching
/// pieces whose union is itself an interval, and drops duplicates.
fn canonicalize(
    l: &FreeISemilattice,
    mut pieces: Vec<(LatPoint, LatPoint)>,
) -> Result<Vec<(LatPoint, LatPoint)>, GraphError> {
    // tighten
    for piece in pieces.iter_mut() {
        let content = l.interval(piece.0, piece.1);
        debug_assert!(!content.is_empty());
        let mut lo = LatPoint::Top;
        let mut hi = LatPoint::Bottom;
        for &v in &content {
            lo = l.meet(lo, LatPoint::El(v));
            hi = l.join(hi, LatPoint::El(v));
        }
        let tightened = l.interval(lo, hi);
        if tightened != content {
            return Err(GraphError::DecompositionFailed(
                "piece is not determined by its bounds".into(),
            ));
        }
        *piece = (lo, hi);
    }
    pieces.dedup();
    // merge neighbors whose union is an interval
    let mut merged: Vec<(LatPoint, LatPoint)> = Vec::new();
    for piece in pieces {
        if let Some(last) = merged.last().copied() {
            let lo = l.meet(last.0, piece.0);
            let hi = l.join(last.1, piece.1);
            let mut union: Vec<usize> = l.interval(last.0, last.1);
            union.extend(l.interval(piece.0, piece.1));
            union.sort_unstable();
            union.dedup();
            if l.interval(lo, hi) == union {
                *merged.last_mut().unwrap() = (lo, hi);
                continue;
            }
        }
        merged.push(piece);
    }
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use poset_core::SimplicialComplex;
    use z2_core::Z2Complex;

    fn two_swapped_points() -> FreeISemilattice {
        let k = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let x = Z2Complex::new(k, vec![1, 0]).unwrap();
        FreeISemilattice::from_z2complex(&x).unwrap()
    }

    fn square_boundary() -> FreeISemilattice {
        let k = SimplicialComplex::new(
            vec!["v1".into(), "v2".into(), "v3".into(), "v4".into()],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
        )
        .unwrap();
        let x = Z2Complex::new(k, vec![2, 3, 0, 1]).unwrap();
        FreeISemilattice::from_z2complex(&x).unwrap()
    }

    #[test]
    fn compatibility_of_two_points_is_k2() {
        let l = two_swapped_points();
        let g = compatibility_graph(&l).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn square_boundary_compatibility_adjacency() {
        let l = square_boundary();
        let g = compatibility_graph(&l).unwrap();
        assert_eq!(g.vertex_count(), 8);
        let v1 = g.index_of("{v1}").unwrap();
        let mut nb: Vec<&str> = (0..8)
            .filter(|&v| g.has_edge(v1, v))
            .map(|v| g.label(v))
            .collect();
        nb.sort_unstable();
        assert_eq!(nb, vec!["{v2,v3}", "{v3,v4}", "{v3}"]);
    }

    #[test]
    fn fixed_point_rejected() {
        let k = SimplicialComplex::new(vec!["a".into()], vec![]).unwrap();
        let x = Z2Complex::identity_action(k);
        assert!(matches!(
            FreeISemilattice::from_z2complex(&x),
            Err(GraphError::NotFree(_))
        ));
    }

    #[test]
    fn fatness_cases() {
        // height <= 2 is vacuously fat
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        assert!(is_fat(&p).0);
        // a 3-chain is not fat
        let c3 = Poset::from_index_pairs(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        let (fat, witness) = is_fat(&c3);
        assert!(!fat);
        assert_eq!(witness, Some(("a".into(), "b".into(), "c".into())));
        // the face poset of a hollow triangle is fat
        let k = SimplicialComplex::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        assert!(is_fat(&k.face_poset_by_inclusion().unwrap()).0);
        // face semilattices of complexes are fat
        assert!(is_fat(square_boundary().poset()).0);
    }

    #[test]
    fn nn_closure_on_square_boundary() {
        let l = square_boundary();
        let v1 = l.poset().index_of("{v1}").unwrap();
        let res = nn_closure(&l, &[v1]).unwrap();
        let mut nb_labels: Vec<&str> = res
            .neighbors
            .iter()
            .map(|&v| l.poset().label(v))
            .collect();
        nb_labels.sort_unstable();
        assert_eq!(nb_labels, vec!["{v2,v3}", "{v3,v4}", "{v3}"]);
        assert!(res.matches);
        assert_eq!(res.nn_direct, vec![v1]);
    }

    #[test]
    fn nn_closure_of_empty_set() {
        let l = square_boundary();
        let res = nn_closure(&l, &[]).unwrap();
        assert_eq!(res.neighbors.len(), 8);
        assert_eq!(res.intervals, vec![(LatPoint::Bottom, LatPoint::Top)]);
        assert!(res.matches);
        assert!(res.nn_direct.is_empty());
    }

    #[test]
    fn nn_closure_is_idempotent() {
        let l = square_boundary();
        for a in 0..l.poset().len() {
            let n1 = l.neighbors(&[a]);
            let n3 = l.neighbors(&l.neighbors(&n1));
            assert_eq!(n1, n3, "N^3 = N at {a}");
        }
    }
}
