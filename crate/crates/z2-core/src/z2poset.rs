use std::collections::HashMap;

use poset_core::Poset;

use crate::z2complex::Z2Complex;
use crate::{Z2Error, A1_LABEL, A2_LABEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    Monotone,
    Antitone,
}

/// A poset with a genuine involution, either order-preserving or
/// order-reversing. Construction verifies both properties.
#[derive(Clone, Debug)]
pub struct Z2Poset {
    poset: Poset,
    omega: Vec<usize>,
    kind: ActionKind,
}

impl Z2Poset {
    pub fn new(poset: Poset, omega: Vec<usize>, kind: ActionKind) -> Result<Z2Poset, Z2Error> {
        if omega.len() != poset.len() || omega.iter().any(|&i| i >= poset.len()) {
            return Err(Z2Error::NotInvolution("map is not total".into()));
        }
        for x in 0..poset.len() {
            if omega[omega[x]] != x {
                return Err(Z2Error::NotInvolution(poset.label(x).to_string()));
            }
        }
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                if poset.leq(x, y) {
                    let ok = match kind {
                        ActionKind::Monotone => poset.leq(omega[x], omega[y]),
                        ActionKind::Antitone => poset.leq(omega[y], omega[x]),
                    };
                    if !ok {
                        return Err(Z2Error::KindViolation(format!(
                            "at ({}, {})",
                            poset.label(x),
                            poset.label(y)
                        )));
                    }
                }
            }
        }
        Ok(Z2Poset { poset, omega, kind })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn omega(&self, x: usize) -> usize {
        self.omega[x]
    }

    pub fn omega_map(&self) -> &[usize] {
        &self.omega
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    /// The induced subposet of fixed elements; may be empty.
    pub fn fixed_subposet(&self) -> Poset {
        let fixed: Vec<usize> = (0..self.poset.len())
            .filter(|&x| self.omega[x] == x)
            .collect();
        self.poset.induced(&fixed)
    }

    /// Order complex together with the induced vertex action. Chains map to
    /// chains for either kind, so the action is simplicial.
    pub fn order_z2complex(&self) -> Result<Z2Complex, Z2Error> {
        let complex = self.poset.order_complex()?;
        let omega: Vec<u32> = self.omega.iter().map(|&i| i as u32).collect();
        Z2Complex::new(complex, omega)
    }
}

/// Adds two fresh incomparable minima swapped by the action; the order
/// complex of the result is the suspension of the input's as a Z2-space.
/// The input action must be monotone (the extension of an antitone action
/// would reverse nothing below the new minima).
pub fn two_point_extension(b: &Z2Poset) -> Result<Z2Poset, Z2Error> {
    if b.kind() == ActionKind::Antitone && !b.poset().is_empty() {
        return Err(Z2Error::KindMismatch);
    }
    for reserved in [A1_LABEL, A2_LABEL] {
        if b.poset().index_of(reserved).is_some() {
            return Err(Z2Error::Poset(poset_core::PosetError::ReservedLabel(
                reserved.to_string(),
            )));
        }
    }
    let n = b.poset().len();
    let mut labels = b.poset().labels().to_vec();
    labels.push(A1_LABEL.to_string());
    labels.push(A2_LABEL.to_string());
    let base = b.poset().clone();
    let poset = Poset::from_closed_relation(labels, move |i, j| {
        if i == j {
            true
        } else if i >= n {
            j < n // each new minimum sits below every old element
        } else if j >= n {
            false
        } else {
            base.leq(i, j)
        }
    })?;
    let mut omega: Vec<usize> = b.omega_map().to_vec();
    omega.push(n + 1);
    omega.push(n);
    Z2Poset::new(poset, omega, ActionKind::Monotone)
}

/// The interval poset of an antitone Z2-poset with its induced action
/// `(x, y) -> (w(y), w(x))`; the result is a monotone Z2-poset.
pub fn induced_action_interval(q: &Z2Poset) -> Result<Z2Poset, Z2Error> {
    if q.kind() != ActionKind::Antitone {
        return Err(Z2Error::KindMismatch);
    }
    let ip = q.poset().interval_poset()?;
    let ivs = q.poset().intervals();
    let index: HashMap<(usize, usize), usize> = ivs
        .iter()
        .enumerate()
        .map(|(k, &pair)| (pair, k))
        .collect();
    let omega: Vec<usize> = ivs
        .iter()
        .map(|&(x, y)| index[&(q.omega(y), q.omega(x))])
        .collect();
    Z2Poset::new(ip, omega, ActionKind::Monotone)
}

/// The chain poset of an antitone Z2-poset with the reversed elementwise
/// action; again a monotone Z2-poset.
pub fn induced_action_chain(q: &Z2Poset) -> Result<Z2Poset, Z2Error> {
    if q.kind() != ActionKind::Antitone {
        return Err(Z2Error::KindMismatch);
    }
    let cp = q.poset().chain_poset()?;
    let chains = q.poset().chains();
    let index: HashMap<Vec<usize>, usize> = chains
        .iter()
        .enumerate()
        .map(|(k, c)| (c.clone(), k))
        .collect();
    let omega: Vec<usize> = chains
        .iter()
        .map(|c| {
            let mut img: Vec<usize> = c.iter().map(|&x| q.omega(x)).collect();
            img.sort_unstable();
            index[&img]
        })
        .collect();
    Z2Poset::new(cp, omega, ActionKind::Monotone)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain_swap() -> Z2Poset {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap()
    }

    fn two_chain_swap() -> Z2Poset {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap()
    }

    fn four_chain_antipodal() -> Z2Poset {
        let p = Poset::from_index_pairs(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![(0, 1), (1, 2), (2, 3)],
        )
        .unwrap();
        Z2Poset::new(p, vec![3, 2, 1, 0], ActionKind::Antitone).unwrap()
    }

    #[test]
    fn involution_validation() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        assert!(matches!(
            Z2Poset::new(p.clone(), vec![1, 1], ActionKind::Monotone),
            Err(Z2Error::NotInvolution(_))
        ));
        // the swap on a 2-chain is antitone, not monotone
        assert!(matches!(
            Z2Poset::new(p, vec![1, 0], ActionKind::Monotone),
            Err(Z2Error::KindViolation(_))
        ));
    }

    #[test]
    fn interval_action_on_antichain() {
        let q = antichain_swap();
        let iq = induced_action_interval(&q).unwrap();
        assert_eq!(iq.poset().len(), 2);
        let aa = iq.poset().index_of("(a,a)").unwrap();
        let bb = iq.poset().index_of("(b,b)").unwrap();
        assert_eq!(iq.omega(aa), bb);
    }

    #[test]
    fn interval_action_on_two_chain() {
        let q = two_chain_swap();
        let iq = induced_action_interval(&q).unwrap();
        let ab = iq.poset().index_of("(a,b)").unwrap();
        let aa = iq.poset().index_of("(a,a)").unwrap();
        let bb = iq.poset().index_of("(b,b)").unwrap();
        assert_eq!(iq.omega(ab), ab);
        assert_eq!(iq.omega(aa), bb);
    }

    #[test]
    fn chain_action_on_two_chain_fixes_long_chain() {
        let q = two_chain_swap();
        let cq = induced_action_chain(&q).unwrap();
        let full = cq.poset().index_of("{a,b}").unwrap();
        assert_eq!(cq.omega(full), full);
        let a = cq.poset().index_of("{a}").unwrap();
        let b = cq.poset().index_of("{b}").unwrap();
        assert_eq!(cq.omega(a), b);
    }

    #[test]
    fn chain_action_on_four_chain_has_three_fixed() {
        let q = four_chain_antipodal();
        let cq = induced_action_chain(&q).unwrap();
        assert_eq!(cq.poset().len(), 15);
        let fixed = cq.fixed_subposet();
        assert_eq!(fixed.len(), 3);
    }

    #[test]
    fn fixed_subposet_cases() {
        assert_eq!(antichain_swap().fixed_subposet().len(), 0);
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        let idq = Z2Poset::new(p, vec![0, 1], ActionKind::Monotone).unwrap();
        assert_eq!(idq.fixed_subposet().len(), 2);
    }

    #[test]
    fn two_point_extension_of_empty_is_two_swapped_points() {
        let e = Z2Poset::new(Poset::empty(), vec![], ActionKind::Monotone).unwrap();
        let ext = two_point_extension(&e).unwrap();
        assert_eq!(ext.poset().len(), 2);
        assert_eq!(ext.omega(0), 1);
        assert!(!ext.poset().comparable(0, 1));
    }

    #[test]
    fn two_point_extension_rejects_reserved_labels() {
        let p = Poset::from_index_pairs(vec![A1_LABEL.into()], vec![]).unwrap();
        let q = Z2Poset::new(p, vec![0], ActionKind::Monotone).unwrap();
        assert!(two_point_extension(&q).is_err());
    }
}
