use poset_core::SimplicialComplex;
use rayon::prelude::*;
use serde::Serialize;

use crate::fnv::FnvMap;
use crate::gf2::Gf2Mat;
use crate::reduce::{homology_reduce, FaceTable};
use crate::BettiVector;

/// Mod-2 chain complex of a simplicial complex: faces listed per dimension in
/// deterministic sorted order, with an augmentation row in degree 0 so that
/// the homology read off the ranks is reduced.
pub struct ChainComplexGf2 {
    pub faces: Vec<Vec<Vec<u32>>>,
    /// `boundaries[0]` is the 1 x f_0 augmentation; `boundaries[k]` maps
    /// k-chains to (k-1)-chains.
    pub boundaries: Vec<Gf2Mat>,
}

impl ChainComplexGf2 {
    /// d . d = 0, checked as honest matrix products.
    pub fn composition_is_zero(&self) -> bool {
        (1..self.boundaries.len()).all(|k| self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero())
    }
}

fn faces_by_dim(faces: Vec<Vec<u32>>) -> Vec<Vec<Vec<u32>>> {
    let dim = faces.iter().map(|f| f.len()).max().unwrap_or(1) - 1;
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim + 1];
    for f in faces {
        by_dim[f.len() - 1].push(f);
    }
    // all_faces output is already (len, lex)-sorted; keep each class sorted
    by_dim
}

fn boundary_of(by_dim: &[Vec<Vec<u32>>]) -> Vec<Gf2Mat> {
    let mut mats = Vec::with_capacity(by_dim.len());
    let mut aug = Gf2Mat::new(1, by_dim[0].len());
    for j in 0..by_dim[0].len() {
        aug.set(0, j);
    }
    mats.push(aug);
    for k in 1..by_dim.len() {
        let rows = &by_dim[k - 1];
        let index: FnvMap<&[u32], usize> = rows
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let mut m = Gf2Mat::new(rows.len(), by_dim[k].len());
        for (j, f) in by_dim[k].iter().enumerate() {
            for drop in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(drop);
                m.set(index[sub.as_slice()], j);
            }
        }
        mats.push(m);
    }
    mats
}

/// Boundary matrices of the full complex (no reduction pass).
pub fn boundary_matrices(k: &SimplicialComplex) -> ChainComplexGf2 {
    let by_dim = faces_by_dim(k.all_faces());
    let boundaries = boundary_of(&by_dim);
    ChainComplexGf2 {
        faces: by_dim,
        boundaries,
    }
}

fn betti_from_faces(faces: Vec<Vec<u32>>) -> BettiVector {
    // cancel unique boundary/coboundary pairs first; the survivors carry
    // the reduced homology under the restricted boundary maps
    let table = FaceTable::from_faces(faces);
    let alive = homology_reduce(&table);
    let survivors: Vec<u32> = (0..table.len() as u32)
        .filter(|&id| alive[id as usize])
        .collect();
    if survivors.is_empty() {
        return BettiVector::point();
    }
    let max_len = survivors
        .iter()
        .map(|&id| table.faces[id as usize].len())
        .max()
        .unwrap();
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); max_len];
    for &id in &survivors {
        by_dim[table.faces[id as usize].len() - 1].push(id);
    }
    let mut position = vec![usize::MAX; table.len()];
    for class in &by_dim {
        for (row, &id) in class.iter().enumerate() {
            position[id as usize] = row;
        }
    }
    // dense bit-packed elimination for small boundary maps, sparse lowest-one
    // column reduction once the area gets large
    const DENSE_AREA: usize = 4_000_000;
    let ranks: Vec<usize> = (1..max_len)
        .into_par_iter()
        .map(|k| {
            let rows = by_dim[k - 1].len();
            let cols = &by_dim[k];
            let sparse_cols = || -> Vec<Vec<u32>> {
                cols.iter()
                    .map(|&id| {
                        let mut c: Vec<u32> = table.subfaces[id as usize]
                            .iter()
                            .filter(|&&s| alive[s as usize])
                            .map(|&s| position[s as usize] as u32)
                            .collect();
                        c.sort_unstable();
                        c
                    })
                    .collect()
            };
            if rows * cols.len() > DENSE_AREA {
                Gf2Mat::sparse_rank(rows, sparse_cols())
            } else {
                let mut m = Gf2Mat::new(rows, cols.len());
                for (col, sc) in sparse_cols().into_iter().enumerate() {
                    for r in sc {
                        m.set(r as usize, col);
                    }
                }
                m.rank()
            }
        })
        .collect();
    let rank_at = |k: usize| -> usize {
        if k >= 1 && k <= ranks.len() {
            ranks[k - 1]
        } else {
            0
        }
    };
    let mut reduced = Vec::with_capacity(max_len);
    for k in 0..max_len {
        reduced.push(by_dim[k].len() - rank_at(k) - rank_at(k + 1));
    }
    BettiVector::from_reduced(reduced)
}

/// Reduced GF(2) Betti vector of a nonempty complex.
pub fn reduced_betti(k: &SimplicialComplex) -> BettiVector {
    betti_from_faces(k.all_faces())
}

/// Betti numbers up to `max_dim` only, computed on the (max_dim+1)-skeleton.
/// Entries above the cap are not reported.
pub fn reduced_betti_capped(k: &SimplicialComplex, max_dim: Option<usize>) -> BettiVector {
    match max_dim {
        None => reduced_betti(k),
        Some(cap) => {
            let faces: Vec<Vec<u32>> = k
                .all_faces()
                .into_iter()
                .filter(|f| f.len() <= cap + 2)
                .collect();
            let betti = betti_from_faces(faces);
            let mut v: Vec<usize> = betti.reduced().to_vec();
            v.truncate(cap + 1);
            BettiVector::from_reduced(v)
        }
    }
}

/// Non-reduced Euler characteristic: alternating sum of face counts.
pub fn euler_char(k: &SimplicialComplex) -> i64 {
    let mut chi = 0i64;
    for f in k.all_faces() {
        chi += if (f.len() - 1) % 2 == 0 { 1 } else { -1 };
    }
    chi
}

#[derive(Clone, Debug, Serialize)]
pub struct ConnectivityEstimate {
    /// Largest c with reduced Betti vanishing through degree c; -1 when
    /// disconnected.
    pub connectivity: i64,
    /// Always true: this is homology-level evidence, not a pi_1-certified
    /// connectivity bound.
    pub homology_only: bool,
}

pub fn connectivity_estimate(k: &SimplicialComplex) -> ConnectivityEstimate {
    let betti = reduced_betti(k);
    let dim = k.dim() as i64;
    let mut c = -1i64;
    for d in 0..=dim {
        if betti.get(d as usize) == 0 {
            c = d;
        } else {
            break;
        }
    }
    ConnectivityEstimate {
        connectivity: c,
        homology_only: true,
    }
}
