use poset_core::Poset;
use proptest::prelude::*;

/// Arbitrary poset on up to 6 elements: upper-triangular relation bits,
/// transitively closed.
fn poset_strategy() -> impl Strategy<Value = Poset> {
    (1usize..=6, proptest::collection::vec(any::<bool>(), 15)).prop_map(|(n, bits)| {
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let mut pairs = Vec::new();
        let mut idx = 0;
        for i in 0..n {
            for j in i + 1..n {
                if idx < bits.len() && bits[idx] {
                    pairs.push((i, j));
                }
                idx += 1;
            }
        }
        Poset::from_index_pairs(labels, pairs).expect("upper-triangular input is acyclic")
    })
}

proptest! {
    /// The order complex of the chain poset is the barycentric subdivision
    /// of the order complex.
    #[test]
    fn chain_poset_models_subdivision(p in poset_strategy()) {
        let via_chains = p.chain_poset().unwrap().order_complex().unwrap();
        let via_subdivision = p.order_complex().unwrap().barycentric_subdivision().unwrap();
        prop_assert!(via_chains.is_isomorphic_labeled(&via_subdivision));
    }

    /// The face poset of the order complex is the chain poset,
    /// element for element.
    #[test]
    fn face_poset_of_order_complex_is_chain_poset(p in poset_strategy()) {
        let fp = p.order_complex().unwrap().face_poset().unwrap();
        let cp = p.chain_poset().unwrap();
        prop_assert_eq!(fp.len(), cp.len());
        for i in 0..fp.len() {
            let j = cp.index_of(fp.label(i)).unwrap();
            for i2 in 0..fp.len() {
                let j2 = cp.index_of(fp.label(i2)).unwrap();
                prop_assert_eq!(fp.leq(i, i2), cp.leq(j, j2));
            }
        }
    }

    /// Rebuilding a poset from its closed relation changes nothing.
    #[test]
    fn closure_is_idempotent(p in poset_strategy()) {
        let mut pairs = Vec::new();
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.leq(i, j) {
                    pairs.push((i, j));
                }
            }
        }
        let q = Poset::from_index_pairs(p.labels().to_vec(), pairs).unwrap();
        prop_assert_eq!(p, q);
    }
}
