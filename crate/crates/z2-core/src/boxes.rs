use std::collections::HashMap;

use poset_core::{Poset, PosetError, BOTTOM_LABEL};

use crate::wi::WiPoset;
use crate::z2poset::{ActionKind, Z2Poset};
use crate::Z2Error;

/// One coordinate of an extended box pair: a base element or the adjoined
/// minimum.
pub type Coord = Option<usize>;

fn coord_label(poset: &Poset, c: Coord) -> String {
    match c {
        Some(i) => poset.label(i).to_string(),
        None => BOTTOM_LABEL.to_string(),
    }
}

fn coord_leq(poset: &Poset, a: Coord, b: Coord) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => poset.leq(x, y),
    }
}

fn pair_poset(
    base: &Poset,
    pairs: &[(Coord, Coord)],
    kind: ActionKind,
) -> Result<Z2Poset, Z2Error> {
    let labels: Vec<String> = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", coord_label(base, x), coord_label(base, y)))
        .collect();
    let poset = Poset::from_closed_relation(labels, |a, b| {
        coord_leq(base, pairs[a].0, pairs[b].0) && coord_leq(base, pairs[a].1, pairs[b].1)
    })?;
    let index: HashMap<(Coord, Coord), usize> = pairs
        .iter()
        .enumerate()
        .map(|(k, &p)| (p, k))
        .collect();
    let omega: Vec<usize> = pairs.iter().map(|&(x, y)| index[&(y, x)]).collect();
    Z2Poset::new(poset, omega, kind)
}

/// The element list of the box poset, in construction order.
pub fn box_pair_elements(p: &WiPoset) -> Vec<(usize, usize)> {
    let n = p.poset().len();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if p.poset().leq(x, p.c(y)) && p.poset().leq(y, p.c(x)) {
                pairs.push((x, y));
            }
        }
    }
    pairs
}

/// The element list of the enriched box poset (box pairs embedded in the
/// superposet, plus the two leg families), in construction order.
pub fn enriched_pair_elements(p: &WiPoset, s: &Poset) -> Result<Vec<(Coord, Coord)>, Z2Error> {
    if !p.poset().is_induced_subposet_of(s) {
        return Err(Z2Error::NotASubposet(
            "base of the weak involution is not an induced subposet of the enrichment".into(),
        ));
    }
    let embed: Vec<usize> = p
        .poset()
        .labels()
        .iter()
        .map(|l| s.index_of(l).expect("checked above"))
        .collect();
    let mut pairs: Vec<(Coord, Coord)> = box_pair_elements(p)
        .into_iter()
        .map(|(x, y)| (Some(embed[x]), Some(embed[y])))
        .collect();
    for i in 0..s.len() {
        pairs.push((Some(i), None));
    }
    for i in 0..s.len() {
        pairs.push((None, Some(i)));
    }
    pairs.sort_unstable();
    pairs.dedup();
    Ok(pairs)
}

/// The box poset: pairs `(x, y)` with `x <= C(y)` and `y <= C(x)`, ordered
/// componentwise, with the coordinate swap as its (monotone) action.
pub fn box_poset(p: &WiPoset) -> Z2Poset {
    let pairs: Vec<(Coord, Coord)> = box_pair_elements(p)
        .into_iter()
        .map(|(x, y)| (Some(x), Some(y)))
        .collect();
    pair_poset(p.poset(), &pairs, ActionKind::Monotone)
        .expect("box pairs are swap-closed and componentwise ordered")
}

/// The extended box poset: the box poset plus the legs `(p, bot)` and
/// `(bot, q)` over the base, inside `P-hat x P-hat` (the pair `(bot, bot)`
/// is excluded). Fails only when the base uses the reserved bottom label.
pub fn extended_box(p: &WiPoset) -> Result<Z2Poset, Z2Error> {
    enriched_box(p, p.poset())
}

/// The box poset of `p` enriched over a superposet `s`: box pairs of `p`
/// plus legs over all of `s`. Requires the base of `p` to be an induced
/// subposet of `s` (matched by label).
pub fn enriched_box(p: &WiPoset, s: &Poset) -> Result<Z2Poset, Z2Error> {
    if s.index_of(BOTTOM_LABEL).is_some() {
        return Err(Z2Error::Poset(PosetError::ReservedLabel(
            BOTTOM_LABEL.to_string(),
        )));
    }
    let pairs = enriched_pair_elements(p, s)?;
    pair_poset(s, &pairs, ActionKind::Monotone)
}
