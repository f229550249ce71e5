//! Cross-checks the engine against a deliberately naive second route:
//! unpacked boolean matrices, subset-expansion face enumeration, no
//! reduction pass, and a different elimination order.

use std::collections::BTreeSet;

use homology_engine::{euler_char, join_complexes, reduced_betti, suspension, BettiVector};
use poset_core::SimplicialComplex;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// All nonempty faces by brute subset expansion.
fn oracle_faces(k: &SimplicialComplex) -> Vec<Vec<u32>> {
    let mut set: BTreeSet<Vec<u32>> = BTreeSet::new();
    for facet in k.facets() {
        let m = facet.len();
        for mask in 1u64..(1 << m) {
            let sub: Vec<u32> = (0..m)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| facet[i])
                .collect();
            set.insert(sub);
        }
    }
    set.into_iter().collect()
}

fn oracle_rank(mut m: Vec<Vec<bool>>) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut rank = 0;
    for r in 0..rows {
        // row-major pivot search, opposite orientation to the engine
        let mut lead = None;
        for c in 0..cols {
            if m[r][c] {
                lead = Some(c);
                break;
            }
        }
        let Some(lead) = lead else { continue };
        rank += 1;
        for r2 in 0..rows {
            if r2 != r && m[r2][lead] {
                for c in 0..cols {
                    let v = m[r][c];
                    m[r2][c] ^= v;
                }
            }
        }
    }
    rank
}

fn oracle_betti(k: &SimplicialComplex) -> BettiVector {
    let faces = oracle_faces(k);
    let dim = faces.iter().map(|f| f.len()).max().unwrap() - 1;
    let mut by_dim: Vec<Vec<Vec<u32>>> = vec![Vec::new(); dim + 1];
    for f in faces {
        by_dim[f.len() - 1].push(f);
    }
    let mut ranks = vec![0usize; dim + 2];
    ranks[0] = 1; // augmentation over a nonempty complex
    for k_dim in 1..=dim {
        let rows = &by_dim[k_dim - 1];
        let cols = &by_dim[k_dim];
        let mut m = vec![vec![false; cols.len()]; rows.len()];
        for (j, f) in cols.iter().enumerate() {
            for drop in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(drop);
                let i = rows.iter().position(|g| *g == sub).unwrap();
                m[i][j] = true;
            }
        }
        ranks[k_dim] = oracle_rank(m);
    }
    let mut reduced = Vec::new();
    for k_dim in 0..=dim {
        reduced.push(by_dim[k_dim].len() - ranks[k_dim] - ranks[k_dim + 1]);
    }
    BettiVector::from_reduced(reduced)
}

struct Rng(u64);
impl Rng {
    fn next(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

fn random_complex(rng: &mut Rng) -> SimplicialComplex {
    let n = (rng.next() % 5 + 2) as usize;
    let n_facets = (rng.next() % 5 + 1) as usize;
    let mut faces = Vec::new();
    for _ in 0..n_facets {
        let size = (rng.next() % 4 + 1) as usize;
        let mut f: Vec<u32> = (0..size as u32).map(|_| (rng.next() % n as u64) as u32).collect();
        f.sort_unstable();
        f.dedup();
        faces.push(f);
    }
    SimplicialComplex::new(labels(n), faces).unwrap()
}

#[test]
fn engine_matches_oracle_on_random_complexes() {
    let mut rng = Rng(0xfeed);
    for _ in 0..60 {
        let k = random_complex(&mut rng);
        assert_eq!(reduced_betti(&k), oracle_betti(&k), "complex {k:?}");
    }
}

#[test]
fn engine_matches_oracle_on_named_complexes() {
    let circle = SimplicialComplex::new(labels(3), vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
    assert_eq!(oracle_betti(&circle), BettiVector::sphere(1));
    assert_eq!(reduced_betti(&circle), BettiVector::sphere(1));

    let square = SimplicialComplex::new(
        labels(4),
        vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .unwrap();
    assert_eq!(reduced_betti(&square), BettiVector::sphere(1));
    assert_eq!(oracle_betti(&square), BettiVector::sphere(1));
}

#[test]
fn euler_equals_alternating_betti_sum() {
    let mut rng = Rng(0xbead);
    for _ in 0..40 {
        let k = random_complex(&mut rng);
        let betti = reduced_betti(&k);
        let mut sum = 1i64;
        for (d, &b) in betti.reduced().iter().enumerate() {
            sum += if d % 2 == 0 { b as i64 } else { -(b as i64) };
        }
        assert_eq!(euler_char(&k), sum, "complex {k:?}");
    }
}

#[test]
fn join_shift_law_on_random_pairs() {
    let mut rng = Rng(0xc0ffee);
    for _ in 0..25 {
        let k = random_complex(&mut rng);
        let l = random_complex(&mut rng);
        let join = join_complexes(&k, &l).unwrap();
        let bk = reduced_betti(&k);
        let bl = reduced_betti(&l);
        let bj = reduced_betti(&join);
        let top = bk.reduced().len() + bl.reduced().len() + 2;
        for deg in 0..top {
            let mut expect = 0usize;
            for i in 0..deg {
                let j = deg - 1 - i;
                expect += bk.get(i) * bl.get(j);
            }
            assert_eq!(bj.get(deg), expect, "degree {deg} of {k:?} * {l:?}");
        }
    }
}

#[test]
fn suspension_shifts_betti() {
    let mut rng = Rng(0xabba);
    for _ in 0..20 {
        let k = random_complex(&mut rng);
        let s = suspension(&k).unwrap();
        assert_eq!(reduced_betti(&s), reduced_betti(&k).suspension_shift());
    }
}

#[test]
fn betti_invariant_under_relabelling_and_facet_order() {
    let mut rng = Rng(0xdada);
    for _ in 0..20 {
        let k = random_complex(&mut rng);
        // shuffle facets and relabel vertices by reversal
        let n = k.vertex_count() as u32;
        let relabel: Vec<String> = (0..n).map(|i| format!("w{}", n - 1 - i)).collect();
        let mut facets: Vec<Vec<u32>> = k
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| n - 1 - v).collect())
            .collect();
        facets.reverse();
        let k2 = SimplicialComplex::new(relabel, facets).unwrap();
        assert_eq!(reduced_betti(&k), reduced_betti(&k2));
    }
}
