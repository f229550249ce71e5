use crate::{Poset, PosetError};

/// A total order-preserving map between two posets.
#[derive(Clone, Debug)]
pub struct MonotoneMap {
    source: Poset,
    target: Poset,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Poset, target: Poset, map: Vec<usize>) -> Result<Self, PosetError> {
        if map.len() != source.len() {
            let missing = source.label(map.len().min(source.len().saturating_sub(1)));
            return Err(PosetError::NotTotal(missing.to_string()));
        }
        for (x, &fx) in map.iter().enumerate() {
            if fx >= target.len() {
                return Err(PosetError::NotTotal(source.label(x).to_string()));
            }
        }
        for x in 0..source.len() {
            for y in 0..source.len() {
                if source.leq(x, y) && !target.leq(map[x], map[y]) {
                    return Err(PosetError::NotMonotone(
                        source.label(x).to_string(),
                        source.label(y).to_string(),
                    ));
                }
            }
        }
        Ok(MonotoneMap {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &Poset {
        &self.source
    }

    pub fn target(&self) -> &Poset {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.map
    }

    pub fn identity(p: &Poset) -> MonotoneMap {
        MonotoneMap {
            source: p.clone(),
            target: p.clone(),
            map: (0..p.len()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.len() != self.target.len() {
            return false;
        }
        let mut seen = vec![false; self.target.len()];
        for &fx in &self.map {
            if seen[fx] {
                return false;
            }
            seen[fx] = true;
        }
        true
    }

    /// Image of the map as a deduplicated, sorted index set in the target.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.map.clone();
        im.sort_unstable();
        im.dedup();
        im
    }
}
