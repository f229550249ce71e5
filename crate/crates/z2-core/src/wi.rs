use poset_core::Poset;

use crate::z2poset::{ActionKind, Z2Poset};
use crate::Z2Error;

/// Diagnostics for the weak-involution axioms: the self-map must be
/// order-reversing, satisfy `x <= C(C(x))`, and consequently `C^3 = C`.
#[derive(Clone, Debug)]
pub struct WiDiagnostics {
    pub order_reversing: bool,
    pub order_reversing_witness: Option<(String, String)>,
    pub expanding_square: bool,
    pub expanding_square_witness: Option<String>,
    pub cube_identity: bool,
    pub cube_identity_witness: Option<String>,
    /// Number of elements with `u <= C(u)`. These are exactly the diagonal
    /// pairs `(u,u)` the box poset contains; recorded so both readings of
    /// the box fixed set (literal diagonal vs. whole base) stay visible.
    pub diagonal_box_count: usize,
}

impl WiDiagnostics {
    pub fn pass(&self) -> bool {
        self.order_reversing && self.expanding_square && self.cube_identity
    }

    pub fn describe(&self) -> String {
        if self.pass() {
            return "weak involution axioms hold".into();
        }
        let mut parts = Vec::new();
        if let Some((x, y)) = &self.order_reversing_witness {
            parts.push(format!("not order-reversing at ({x},{y})"));
        }
        if let Some(x) = &self.expanding_square_witness {
            parts.push(format!("x <= C^2(x) fails at {x}"));
        }
        if let Some(x) = &self.cube_identity_witness {
            parts.push(format!("C^3 = C fails at {x}"));
        }
        parts.join("; ")
    }
}

/// Checks the weak-involution axioms for a total self-map given as an index
/// vector, with witnesses on failure.
pub fn check_wi(poset: &Poset, c: &[usize]) -> WiDiagnostics {
    assert_eq!(c.len(), poset.len(), "self-map must be total");
    let n = poset.len();
    let mut order_reversing = true;
    let mut order_reversing_witness = None;
    'outer: for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) && !poset.leq(c[y], c[x]) {
                order_reversing = false;
                order_reversing_witness =
                    Some((poset.label(x).to_string(), poset.label(y).to_string()));
                break 'outer;
            }
        }
    }
    let mut expanding_square = true;
    let mut expanding_square_witness = None;
    for x in 0..n {
        if !poset.leq(x, c[c[x]]) {
            expanding_square = false;
            expanding_square_witness = Some(poset.label(x).to_string());
            break;
        }
    }
    let mut cube_identity = true;
    let mut cube_identity_witness = None;
    for x in 0..n {
        if c[c[c[x]]] != c[x] {
            cube_identity = false;
            cube_identity_witness = Some(poset.label(x).to_string());
            break;
        }
    }
    let diagonal_box_count = (0..n).filter(|&u| poset.leq(u, c[u])).count();
    WiDiagnostics {
        order_reversing,
        order_reversing_witness,
        expanding_square,
        expanding_square_witness,
        cube_identity,
        cube_identity_witness,
        diagonal_box_count,
    }
}

/// A weakly involutive poset: a finite poset with a total self-map that is
/// order-reversing and expands under squaring. Construction verifies the
/// axioms.
#[derive(Clone, Debug)]
pub struct WiPoset {
    poset: Poset,
    c: Vec<usize>,
}

impl WiPoset {
    pub fn new(poset: Poset, c: Vec<usize>) -> Result<WiPoset, Z2Error> {
        if c.len() != poset.len() || c.iter().any(|&i| i >= poset.len()) {
            return Err(Z2Error::WiAxiomViolation("self-map is not total".into()));
        }
        let diag = check_wi(&poset, &c);
        if !diag.pass() {
            return Err(Z2Error::WiAxiomViolation(diag.describe()));
        }
        Ok(WiPoset { poset, c })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn c(&self, x: usize) -> usize {
        self.c[x]
    }

    pub fn c_map(&self) -> &[usize] {
        &self.c
    }

    pub fn diagnostics(&self) -> WiDiagnostics {
        check_wi(&self.poset, &self.c)
    }

    /// The Lovasz poset: the subposet of elements fixed by `C^2`, on which
    /// `C` restricts to a genuine antitone involution. Nonempty whenever the
    /// base is (`C^3 = C` puts every image of `C` inside it).
    pub fn lovasz(&self) -> Z2Poset {
        let fixed: Vec<usize> = (0..self.poset.len())
            .filter(|&x| self.c[self.c[x]] == x)
            .collect();
        let sub = self.poset.induced(&fixed);
        let pos_of: std::collections::HashMap<usize, usize> =
            fixed.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let omega: Vec<usize> = fixed.iter().map(|&x| pos_of[&self.c[x]]).collect();
        Z2Poset::new(sub, omega, ActionKind::Antitone)
            .expect("restriction of C to its square-fixed part is an antitone involution")
    }
}

/// Loads a weakly involutive poset from JSON:
/// `{"elements": [...], "relations": [["a","b"], ...], "C": {"a":"b", ...}}`
/// with relations meaning `a <= b` (closed internally) and `C` a total
/// label-to-label map.
pub fn wi_poset_from_json(text: &str) -> Result<WiPoset, Z2Error> {
    #[derive(serde::Deserialize)]
    struct WiFile {
        elements: Vec<String>,
        #[serde(default)]
        relations: Vec<(String, String)>,
        #[serde(rename = "C")]
        c: std::collections::BTreeMap<String, String>,
    }
    let file: WiFile = serde_json::from_str(text)
        .map_err(|e| Z2Error::Poset(poset_core::PosetError::Parse(e.to_string())))?;
    let poset = Poset::build(file.elements, &file.relations)?;
    let mut c = Vec::with_capacity(poset.len());
    for i in 0..poset.len() {
        let from = poset.label(i);
        let to = file.c.get(from).ok_or_else(|| {
            Z2Error::WiAxiomViolation(format!("self-map undefined at `{from}`"))
        })?;
        c.push(
            poset
                .index_of(to)
                .ok_or_else(|| Z2Error::Poset(poset_core::PosetError::UnknownLabel(to.clone())))?,
        );
    }
    WiPoset::new(poset, c)
}
