//! Deterministic instance generation: the exhaustive small-graph corpus,
//! seeded 6-vertex samples, and random posets/complexes for the
//! property-style criteria.

use graph_complexes::Graph;
use poset_core::{Poset, SimplicialComplex};
use z2_core::{ActionKind, Z2Poset};

use crate::rng::{self, SplitMix64};

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut pairs = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> bit & 1 == 1 {
                pairs.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(labels, &pairs).expect("mask graphs are simple")
}

/// All connected graphs on `min_n..=max_n` vertices, one per isomorphism
/// class, by canonical-form deduplication of the exhaustive enumeration.
pub fn connected_graphs(min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in min_n..=max_n {
        let bits = n * (n - 1) / 2;
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u64..(1 << bits) {
            let g = graph_from_mask(n, mask);
            if !g.is_connected() {
                continue;
            }
            let code = g.canonical_code();
            if seen.insert(code) {
                out.push(graph_from_mask(n, code));
            }
        }
    }
    out
}

/// `count` distinct (up to isomorphism) connected 6-vertex graphs sampled
/// with edge probability 1/2 from the given seed.
pub fn seeded_six_vertex(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = rng::derive(seed, rng::hash_str("six-vertex"));
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let mask = rng.next_u64() & ((1 << 15) - 1);
        let g = graph_from_mask(6, mask);
        if !g.is_connected() {
            continue;
        }
        let code = g.canonical_code();
        if seen.insert(code) {
            out.push(graph_from_mask(6, code));
        }
    }
    out
}

/// FNV over the canonical codes; embedded in reports.
pub fn corpus_hash(graphs: &[Graph]) -> String {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for g in graphs {
        let code = g.canonical_code() ^ ((g.vertex_count() as u64) << 58);
        for b in code.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100_0000_01b3);
        }
    }
    format!("fnv1a:{h:016x}")
}

pub fn graph_name(g: &Graph) -> String {
    format!(
        "n{}m{}c{:x}",
        g.vertex_count(),
        g.edge_count(),
        g.canonical_code()
    )
}

/// A random poset on at most `max_elems` elements: random relations on a
/// shuffled index order, transitively closed.
pub fn random_poset(rng: &mut SplitMix64, max_elems: usize) -> Poset {
    let n = (rng.below(max_elems as u64) + 1) as usize;
    let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.chance(1, 3) {
                pairs.push((i, j));
            }
        }
    }
    Poset::from_index_pairs(labels, pairs).expect("acyclic by construction")
}

/// A random antitone Z2-poset with at most 8 elements: a random poset glued
/// to its dual with the swap action, sometimes with an isolated fixed point.
pub fn random_antitone(rng: &mut SplitMix64) -> Z2Poset {
    let m = (rng.below(4) + 1) as usize;
    let add_fixed = m <= 3 && rng.chance(1, 3);
    let mut labels: Vec<String> = (0..m).map(|i| format!("a{i}")).collect();
    labels.extend((0..m).map(|i| format!("b{i}")));
    if add_fixed {
        labels.push("z".into());
    }
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if rng.chance(1, 2) {
                pairs.push((i, j)); // a_i <= a_j
                pairs.push((m + j, m + i)); // dual: b_j <= b_i
            }
        }
    }
    let poset = Poset::from_index_pairs(labels, pairs).expect("acyclic by construction");
    let mut omega: Vec<usize> = (0..2 * m).map(|i| (i + m) % (2 * m)).collect();
    if add_fixed {
        omega.push(2 * m);
    }
    Z2Poset::new(poset, omega, ActionKind::Antitone).expect("swap across the dual is antitone")
}

/// A random complex on at most `max_verts` vertices.
pub fn random_complex(rng: &mut SplitMix64, max_verts: usize) -> SimplicialComplex {
    let n = (rng.below(max_verts as u64 - 1) + 2) as usize;
    let labels: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let n_faces = (rng.below(6) + 1) as usize;
    let mut faces = Vec::new();
    for _ in 0..n_faces {
        let size = (rng.below(4) + 1) as usize;
        let mut f: Vec<u32> = (0..size).map(|_| rng.below(n as u64) as u32).collect();
        f.sort_unstable();
        f.dedup();
        faces.push(f);
    }
    SimplicialComplex::new(labels, faces).expect("nonempty vertex set")
}
