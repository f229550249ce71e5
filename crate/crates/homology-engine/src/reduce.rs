//! Free-face reduction of a face table.
//!
//! An elementary collapse removes a pair `(sigma, tau)` where `sigma` has
//! exactly one living coface `tau` and `tau` itself is a facet. The living
//! set stays downward closed and the homotopy type is preserved, so this is
//! both a homology-preserving preprocessing pass and, run to exhaustion with
//! a recorded pair sequence, a contractibility certificate.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use poset_core::SimplicialComplex;

use crate::fnv::FnvMap;

/// Immediate face/coface incidences of every face of a complex.
/// Faces are indexed in (dimension, lexicographic) order.
pub struct FaceTable {
    pub faces: Vec<Vec<u32>>,
    pub index: FnvMap<Vec<u32>, u32>,
    pub cofaces: Vec<Vec<u32>>,
    pub subfaces: Vec<Vec<u32>>,
}

impl FaceTable {
    pub fn build(k: &SimplicialComplex) -> FaceTable {
        Self::from_faces(k.all_faces())
    }

    /// `faces` must be a downward-closed family, sorted by (len, lex).
    pub fn from_faces(faces: Vec<Vec<u32>>) -> FaceTable {
        let mut index: FnvMap<Vec<u32>, u32> = FnvMap::default();
        for (i, f) in faces.iter().enumerate() {
            index.insert(f.clone(), i as u32);
        }
        let mut cofaces = vec![Vec::new(); faces.len()];
        let mut subfaces = vec![Vec::new(); faces.len()];
        for (i, f) in faces.iter().enumerate() {
            if f.len() > 1 {
                for drop in 0..f.len() {
                    let mut sub = f.clone();
                    sub.remove(drop);
                    let s = index[&sub];
                    subfaces[i].push(s);
                    cofaces[s as usize].push(i as u32);
                }
            }
        }
        FaceTable {
            faces,
            index,
            cofaces,
            subfaces,
        }
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Default pop priority: higher-dimensional free faces first,
    /// lexicographic within a dimension.
    pub fn lex_priority(&self) -> Vec<u64> {
        let max_len = self.faces.iter().map(|f| f.len()).max().unwrap_or(1) as u64;
        self.faces
            .iter()
            .enumerate()
            .map(|(i, f)| ((max_len - f.len() as u64) << 32) | i as u64)
            .collect()
    }
}

pub struct Reduction {
    pub alive: Vec<bool>,
    pub alive_count: usize,
    /// Recorded (free face, facet) pairs, in collapse order.
    pub steps: Option<Vec<(u32, u32)>>,
}

impl Reduction {
    pub fn collapsed_to_point(&self) -> bool {
        self.alive_count == 1
    }

    pub fn alive_ids(&self) -> Vec<u32> {
        self.alive
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| a.then_some(i as u32))
            .collect()
    }
}

/// Chain-level reduction for homology: alternately removes pairs
/// `(sigma, tau)` where `sigma` is the unique living boundary cell of `tau`
/// (a coreduction) or `tau` is the unique living coboundary cell of `sigma`.
/// In either case the Morse correction term vanishes, so restricting the
/// boundary maps to the survivors preserves homology of the chain complex.
/// The complex is augmented by the empty cell, so what is preserved is
/// reduced GF(2) homology; the survivor set is generally not a simplicial
/// complex and is only good for rank computations with filtered incidences.
pub fn homology_reduce(table: &FaceTable) -> Vec<bool> {
    let n = table.len();
    let mut alive = vec![true; n];
    let mut empty_alive = true; // the virtual augmentation cell
    let mut coface_count: Vec<u32> = table.cofaces.iter().map(|c| c.len() as u32).collect();
    let mut subface_count: Vec<u32> = table
        .faces
        .iter()
        .enumerate()
        .map(|(i, f)| {
            if f.len() == 1 {
                1 // the empty cell
            } else {
                table.subfaces[i].len() as u32
            }
        })
        .collect();

    let mut coreduce: Vec<u32> = Vec::new();
    let mut collapse_q: Vec<u32> = Vec::new();
    for id in 0..n as u32 {
        if subface_count[id as usize] == 1 {
            coreduce.push(id);
        }
        if coface_count[id as usize] == 1 {
            collapse_q.push(id);
        }
    }

    // removing any cell updates both neighbour counts and feeds both queues
    macro_rules! remove {
        ($x:expr, $alive:ident, $coface:ident, $subface:ident, $cor:ident, $col:ident) => {{
            let x = $x as usize;
            $alive[x] = false;
            for &rho in &table.subfaces[x] {
                let r = rho as usize;
                if $alive[r] {
                    $coface[r] -= 1;
                    if $coface[r] == 1 {
                        $col.push(rho);
                    }
                }
            }
            for &rho in &table.cofaces[x] {
                let r = rho as usize;
                if $alive[r] {
                    $subface[r] -= 1;
                    if $subface[r] == 1 {
                        $cor.push(rho);
                    }
                }
            }
        }};
    }

    loop {
        let mut progressed = false;
        while let Some(tau) = coreduce.pop() {
            let t = tau as usize;
            if !alive[t] || subface_count[t] != 1 {
                continue;
            }
            progressed = true;
            if table.faces[t].len() == 1 {
                // unique boundary cell is the augmentation
                debug_assert!(empty_alive);
                empty_alive = false;
                alive[t] = false;
                for (w, f) in table.faces.iter().enumerate() {
                    if alive[w] && f.len() == 1 {
                        subface_count[w] -= 1;
                    }
                }
                for &rho in &table.cofaces[t] {
                    let r = rho as usize;
                    if alive[r] {
                        subface_count[r] -= 1;
                        if subface_count[r] == 1 {
                            coreduce.push(rho);
                        }
                    }
                }
                for &rho in &table.subfaces[t] {
                    let r = rho as usize;
                    if alive[r] {
                        coface_count[r] -= 1;
                        if coface_count[r] == 1 {
                            collapse_q.push(rho);
                        }
                    }
                }
                continue;
            }
            let Some(&sigma) = table.subfaces[t].iter().find(|&&s| alive[s as usize]) else {
                continue;
            };
            remove!(tau, alive, coface_count, subface_count, coreduce, collapse_q);
            remove!(sigma, alive, coface_count, subface_count, coreduce, collapse_q);
        }
        while let Some(sigma) = collapse_q.pop() {
            let s = sigma as usize;
            if !alive[s] || coface_count[s] != 1 {
                continue;
            }
            let Some(&tau) = table.cofaces[s].iter().find(|&&t| alive[t as usize]) else {
                continue;
            };
            progressed = true;
            remove!(tau, alive, coface_count, subface_count, coreduce, collapse_q);
            remove!(sigma, alive, coface_count, subface_count, coreduce, collapse_q);
            if !coreduce.is_empty() {
                break; // give coreductions priority again
            }
        }
        if !progressed && coreduce.is_empty() && collapse_q.is_empty() {
            break;
        }
    }
    let _ = empty_alive;
    alive
}

/// Greedily collapses free pairs until none remain. `priority[id]` orders the
/// candidate queue (smaller pops first).
pub fn collapse(table: &FaceTable, priority: &[u64], record: bool) -> Reduction {
    let n = table.len();
    let mut alive = vec![true; n];
    let mut alive_count = n;
    let mut coface_count: Vec<u32> = table.cofaces.iter().map(|c| c.len() as u32).collect();
    let mut steps = record.then(Vec::new);

    let mut heap: BinaryHeap<Reverse<(u64, u32)>> = BinaryHeap::with_capacity(n);
    for id in 0..n as u32 {
        if coface_count[id as usize] == 1 {
            heap.push(Reverse((priority[id as usize], id)));
        }
    }

    while let Some(Reverse((_, sigma))) = heap.pop() {
        let s = sigma as usize;
        if !alive[s] || coface_count[s] != 1 {
            continue;
        }
        let Some(&tau) = table.cofaces[s].iter().find(|&&t| alive[t as usize]) else {
            continue;
        };
        let t = tau as usize;
        if coface_count[t] != 0 {
            continue;
        }
        alive[s] = false;
        alive[t] = false;
        alive_count -= 2;
        if let Some(steps) = steps.as_mut() {
            steps.push((sigma, tau));
        }
        for &rho in table.subfaces[s].iter().chain(table.subfaces[t].iter()) {
            let r = rho as usize;
            if !alive[r] {
                continue;
            }
            coface_count[r] -= 1;
            if coface_count[r] == 1 {
                heap.push(Reverse((priority[r], rho)));
            }
            if coface_count[r] == 0 {
                // rho became a facet; its subfaces may now be free
                for &mu in &table.subfaces[r] {
                    if alive[mu as usize] && coface_count[mu as usize] == 1 {
                        heap.push(Reverse((priority[mu as usize], mu)));
                    }
                }
            }
        }
    }

    Reduction {
        alive,
        alive_count,
        steps,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("v{i}")).collect()
    }

    #[test]
    fn full_simplex_collapses() {
        let k = SimplicialComplex::new(labels(4), vec![vec![0, 1, 2, 3]]).unwrap();
        let t = FaceTable::build(&k);
        let r = collapse(&t, &t.lex_priority(), true);
        assert!(r.collapsed_to_point());
        assert_eq!(r.steps.unwrap().len(), 7);
    }

    #[test]
    fn circle_does_not_collapse() {
        let k = SimplicialComplex::new(
            labels(3),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        let t = FaceTable::build(&k);
        let r = collapse(&t, &t.lex_priority(), false);
        assert_eq!(r.alive_count, 6);
    }

    #[test]
    fn cone_over_circle_collapses() {
        let k = SimplicialComplex::new(
            labels(4),
            vec![vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]],
        )
        .unwrap();
        let t = FaceTable::build(&k);
        let r = collapse(&t, &t.lex_priority(), false);
        assert!(r.collapsed_to_point());
    }
}
