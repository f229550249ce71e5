use std::collections::HashMap;

use poset_core::{Chain, MonotoneMap};

use crate::boxes::box_poset;
use crate::wi::WiPoset;
use crate::z2poset::{induced_action_chain, induced_action_interval, Z2Poset};
use crate::{ActionKind, Z2Error};

/// A monotone map of Z2-posets that commutes with the actions. Construction
/// verifies monotonicity and equivariance.
#[derive(Clone, Debug)]
pub struct EquivariantMap {
    source: Z2Poset,
    target: Z2Poset,
    map: MonotoneMap,
}

impl EquivariantMap {
    pub fn new(
        source: Z2Poset,
        target: Z2Poset,
        assignment: Vec<usize>,
    ) -> Result<EquivariantMap, Z2Error> {
        let map = MonotoneMap::new(source.poset().clone(), target.poset().clone(), assignment)?;
        for x in 0..source.poset().len() {
            if map.apply(source.omega(x)) != target.omega(map.apply(x)) {
                return Err(Z2Error::NotEquivariant(
                    source.poset().label(x).to_string(),
                ));
            }
        }
        Ok(EquivariantMap { source, target, map })
    }

    pub fn source(&self) -> &Z2Poset {
        &self.source
    }

    pub fn target(&self) -> &Z2Poset {
        &self.target
    }

    pub fn monotone(&self) -> &MonotoneMap {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map.apply(x)
    }
}

/// The interval-to-box comparison `(x, y) -> (x, C(y))` of an antitone
/// Z2-poset, an exact isomorphism of Z2-posets (with inverse
/// `(a, b) -> (a, C(b))`).
pub fn omega_iso(q: &Z2Poset) -> Result<EquivariantMap, Z2Error> {
    if q.kind() != ActionKind::Antitone {
        return Err(Z2Error::KindMismatch);
    }
    let source = induced_action_interval(q)?;
    let wi = WiPoset::new(q.poset().clone(), q.omega_map().to_vec())?;
    let target = box_poset(&wi);
    let target_index: HashMap<&str, usize> = (0..target.poset().len())
        .map(|i| (target.poset().label(i), i))
        .collect();
    let ivs = q.poset().intervals();
    let assignment: Vec<usize> = ivs
        .iter()
        .map(|&(x, y)| {
            let label = format!("({},{})", q.poset().label(x), q.poset().label(q.omega(y)));
            *target_index
                .get(label.as_str())
                .expect("(x, C(y)) lands in the box poset when x <= y")
        })
        .collect();
    EquivariantMap::new(source, target, assignment)
}

/// The chain-to-interval comparison sending a chain to its endpoints.
pub fn sigma_map(q: &Z2Poset) -> Result<EquivariantMap, Z2Error> {
    if q.kind() != ActionKind::Antitone {
        return Err(Z2Error::KindMismatch);
    }
    let source = induced_action_chain(q)?;
    let target = induced_action_interval(q)?;
    let ivs = q.poset().intervals();
    let iv_index: HashMap<(usize, usize), usize> = ivs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let assignment: Vec<usize> = q
        .poset()
        .chains()
        .into_iter()
        .map(|c| {
            let chain = Chain::new(q.poset(), c).expect("enumerated chains are chains");
            iv_index[&(chain.min(), chain.max())]
        })
        .collect();
    EquivariantMap::new(source, target, assignment)
}

/// The inclusion of the box poset of the Lovasz subposet into the box poset
/// of the ambient weakly involutive poset.
pub fn theta_map(p: &WiPoset) -> EquivariantMap {
    let l = p.lovasz();
    let wl = WiPoset::new(l.poset().clone(), l.omega_map().to_vec())
        .expect("the Lovasz poset is antitone, hence weakly involutive");
    let source = box_poset(&wl);
    let target = box_poset(p);
    let target_index: HashMap<&str, usize> = (0..target.poset().len())
        .map(|i| (target.poset().label(i), i))
        .collect();
    let assignment: Vec<usize> = (0..source.poset().len())
        .map(|i| {
            *target_index
                .get(source.poset().label(i))
                .expect("box pairs over the Lovasz subposet are box pairs over the base")
        })
        .collect();
    EquivariantMap::new(source, target, assignment)
        .expect("inclusion of box posets is monotone and equivariant")
}

#[derive(Clone, Debug)]
pub struct WiMorphismReport {
    /// `f(C(x)) <= C(f(x))` for every x.
    pub holds: bool,
    pub witness: Option<String>,
    /// The induced pair map lands in the target box poset.
    pub box_map_well_defined: bool,
}

/// Checks the morphism condition for a monotone map of weakly involutive
/// posets, and that the induced map of box posets is well defined.
pub fn is_wi_morphism(f: &MonotoneMap, source: &WiPoset, target: &WiPoset) -> WiMorphismReport {
    assert_eq!(f.source().len(), source.poset().len());
    assert_eq!(f.target().len(), target.poset().len());
    let mut holds = true;
    let mut witness = None;
    for x in 0..source.poset().len() {
        if !target.poset().leq(f.apply(source.c(x)), target.c(f.apply(x))) {
            holds = false;
            witness = Some(source.poset().label(x).to_string());
            break;
        }
    }
    let mut box_map_well_defined = true;
    let sp = source.poset();
    'outer: for x in 0..sp.len() {
        for y in 0..sp.len() {
            if sp.leq(x, source.c(y)) && sp.leq(y, source.c(x)) {
                let (fx, fy) = (f.apply(x), f.apply(y));
                if !(target.poset().leq(fx, target.c(fy)) && target.poset().leq(fy, target.c(fx)))
                {
                    box_map_well_defined = false;
                    break 'outer;
                }
            }
        }
    }
    WiMorphismReport {
        holds,
        witness,
        box_map_well_defined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poset_core::Poset;

    fn antichain_swap() -> Z2Poset {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap()
    }

    #[test]
    fn omega_iso_on_antichain() {
        let q = antichain_swap();
        let m = omega_iso(&q).unwrap();
        assert!(m.monotone().is_bijective());
        let aa = m.source().poset().index_of("(a,a)").unwrap();
        let img = m.apply(aa);
        assert_eq!(m.target().poset().label(img), "(a,b)");
    }

    #[test]
    fn omega_iso_inverse_law() {
        // on small antitone posets, (x,y) -> (x, Cy) -> (x, C(Cy)) = (x, y)
        let q = antichain_swap();
        let m = omega_iso(&q).unwrap();
        let ivs = q.poset().intervals();
        for (i, &(x, y)) in ivs.iter().enumerate() {
            let b = m.apply(i);
            let label = m.target().poset().label(b);
            let expect = format!("({},{})", q.poset().label(x), q.poset().label(q.omega(y)));
            assert_eq!(label, expect);
        }
    }

    #[test]
    fn sigma_on_singleton_and_pair_chains() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        let q = Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap();
        let m = sigma_map(&q).unwrap();
        let single = m.source().poset().index_of("{a}").unwrap();
        assert_eq!(m.target().poset().label(m.apply(single)), "(a,a)");
        let full = m.source().poset().index_of("{a,b}").unwrap();
        assert_eq!(m.target().poset().label(m.apply(full)), "(a,b)");
    }

    #[test]
    fn theta_is_identity_for_antitone_posets() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        let w = WiPoset::new(p, vec![1, 0]).unwrap();
        let m = theta_map(&w);
        assert!(m.monotone().is_bijective());
        assert_eq!(m.source().poset().len(), m.target().poset().len());
    }

    #[test]
    fn theta_on_path3_embeds_two_into_six() {
        let labels = vec![
            "{1}".to_string(),
            "{2}".to_string(),
            "{3}".to_string(),
            "{1,3}".to_string(),
        ];
        let poset = Poset::from_index_pairs(labels, vec![(0, 3), (2, 3)]).unwrap();
        let w = WiPoset::new(poset, vec![1, 3, 1, 1]).unwrap();
        let m = theta_map(&w);
        assert_eq!(m.source().poset().len(), 2);
        assert_eq!(m.target().poset().len(), 6);
    }

    #[test]
    fn wi_morphism_identity_holds() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let p = Poset::from_index_pairs(labels, vec![(0, 1)]).unwrap();
        let w = WiPoset::new(p.clone(), vec![1, 0]).unwrap();
        let f = MonotoneMap::identity(&p);
        let rep = is_wi_morphism(&f, &w, &w);
        assert!(rep.holds && rep.box_map_well_defined);
    }

    #[test]
    fn constant_to_maximum_fails_morphism() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let p = Poset::from_index_pairs(labels, vec![(0, 1)]).unwrap();
        let w = WiPoset::new(p.clone(), vec![1, 0]).unwrap();
        let f = MonotoneMap::new(p.clone(), p, vec![1, 1]).unwrap();
        let rep = is_wi_morphism(&f, &w, &w);
        assert!(!rep.holds);
        assert_eq!(rep.witness.as_deref(), Some("a"));
    }

    #[test]
    fn lovasz_inclusion_is_wi_morphism() {
        let labels = vec![
            "{1}".to_string(),
            "{2}".to_string(),
            "{3}".to_string(),
            "{1,3}".to_string(),
        ];
        let poset = Poset::from_index_pairs(labels, vec![(0, 3), (2, 3)]).unwrap();
        let w = WiPoset::new(poset.clone(), vec![1, 3, 1, 1]).unwrap();
        let l = w.lovasz();
        let wl = WiPoset::new(l.poset().clone(), l.omega_map().to_vec()).unwrap();
        let incl: Vec<usize> = l
            .poset()
            .labels()
            .iter()
            .map(|lab| poset.index_of(lab).unwrap())
            .collect();
        let f = MonotoneMap::new(l.poset().clone(), poset, incl).unwrap();
        let rep = is_wi_morphism(&f, &wl, &w);
        assert!(rep.holds && rep.box_map_well_defined);
    }
}
