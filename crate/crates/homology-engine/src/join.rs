use poset_core::{PosetError, SimplicialComplex};

/// Join of two complexes. Vertex labels are disjointified by prefixing
/// (`l:` and `r:`); facets are unions of facets.
pub fn join_complexes(
    k: &SimplicialComplex,
    l: &SimplicialComplex,
) -> Result<SimplicialComplex, PosetError> {
    let mut labels: Vec<String> = k.labels().iter().map(|s| format!("l:{s}")).collect();
    labels.extend(l.labels().iter().map(|s| format!("r:{s}")));
    let offset = k.vertex_count() as u32;
    let mut facets = Vec::with_capacity(k.facets().len() * l.facets().len());
    for a in k.facets() {
        for b in l.facets() {
            let mut f = a.clone();
            f.extend(b.iter().map(|&v| v + offset));
            facets.push(f);
        }
    }
    SimplicialComplex::from_facets(labels, facets)
}

/// Two isolated points; the suspension factor.
pub fn two_point_complex() -> SimplicialComplex {
    SimplicialComplex::new(vec!["p+".into(), "p-".into()], vec![]).unwrap()
}

/// Suspension: join with two fresh points.
pub fn suspension(k: &SimplicialComplex) -> Result<SimplicialComplex, PosetError> {
    join_complexes(&two_point_complex(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{reduced_betti, BettiVector};

    #[test]
    fn s0_join_s0_is_circle() {
        let j = join_complexes(&two_point_complex(), &two_point_complex()).unwrap();
        assert_eq!(j.vertex_count(), 4);
        assert_eq!(reduced_betti(&j), BettiVector::sphere(1));
    }

    #[test]
    fn cone_is_contractible() {
        let pt = SimplicialComplex::new(vec!["x".into()], vec![]).unwrap();
        let circle = SimplicialComplex::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        let cone = join_complexes(&pt, &circle).unwrap();
        assert!(reduced_betti(&cone).is_homology_point());
    }

    #[test]
    fn suspension_of_point_is_contractible() {
        let pt = SimplicialComplex::new(vec!["x".into()], vec![]).unwrap();
        assert!(reduced_betti(&suspension(&pt).unwrap()).is_homology_point());
    }

    #[test]
    fn suspension_of_s0_is_circle() {
        let s = suspension(&two_point_complex()).unwrap();
        assert_eq!(reduced_betti(&s), BettiVector::sphere(1));
    }
}
