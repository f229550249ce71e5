use homology_engine::{reduced_betti, BettiVector};
use poset_core::{MonotoneMap, SimplicialComplex};
use rayon::prelude::*;
use z2_core::EquivariantMap;

use crate::collapse::collapsibility;
use crate::VerifyError;

/// Which fibers a Quillen check takes: preimages of principal down-sets or
/// of principal up-sets. Each structural result's proof fixes a direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberDirection {
    Lower,
    Upper,
}

impl FiberDirection {
    pub fn as_str(self) -> &'static str {
        match self {
            FiberDirection::Lower => "lower",
            FiberDirection::Upper => "upper",
        }
    }
}

/// Order complexes beyond this many faces are not materialised; checks fall
/// back to structure that certifies the same conclusion (cones, fixed
/// subposets), or record that the comparison was skipped for size.
pub const CHAIN_BUDGET: usize = 200_000;

#[derive(Clone, Debug)]
pub struct QuillenReport {
    pub direction: FiberDirection,
    pub fibers_total: usize,
    pub collapse_tier: usize,
    pub homology_tier: usize,
    pub failed_fibers: Vec<String>,
    /// Betti vectors of source and target order complexes, when within the
    /// size budget; contractible fibers already certify the equivalence.
    pub betti_source: Option<BettiVector>,
    pub betti_target: Option<BettiVector>,
    pub betti_equal: Option<bool>,
    pub pass: bool,
}

impl QuillenReport {
    pub fn collapse_fraction(&self) -> f64 {
        if self.fibers_total == 0 {
            1.0
        } else {
            self.collapse_tier as f64 / self.fibers_total as f64
        }
    }
}

fn capped_betti(p: &poset_core::Poset) -> Option<BettiVector> {
    p.count_chains_capped(CHAIN_BUDGET)?;
    Some(reduced_betti(&p.order_complex().expect("nonempty poset")))
}

/// Checks contractibility of every fiber of a monotone map; a pass needs
/// every fiber nonempty and at least homology-point evidence. Fibers with a
/// minimum or maximum are cones and certify at collapse tier without
/// materialising the order complex. On a pass the source and target order
/// complexes must agree in homology, cross-asserted whenever both sides fit
/// the size budget.
pub fn quillen_check(
    f: &MonotoneMap,
    direction: FiberDirection,
    seed: u64,
    restarts: u32,
) -> QuillenReport {
    let target = f.target();
    let source = f.source();
    let results: Vec<(String, &'static str)> = (0..target.len())
        .into_par_iter()
        .map(|q| {
            let members: Vec<usize> = (0..source.len())
                .filter(|&x| match direction {
                    FiberDirection::Lower => target.leq(f.apply(x), q),
                    FiberDirection::Upper => target.leq(q, f.apply(x)),
                })
                .collect();
            let name = target.label(q).to_string();
            if members.is_empty() {
                return (name, "empty");
            }
            let fiber = source.induced(&members);
            // a fiber with an extremum is a cone
            if fiber.minimum().is_some() || fiber.maximum().is_some() {
                return (name, "collapse");
            }
            let complex = fiber.order_complex().expect("nonempty fiber");
            let verdict = collapsibility(&complex, seed ^ q as u64, restarts);
            (name, verdict.tier())
        })
        .collect();
    let mut collapse_tier = 0;
    let mut homology_tier = 0;
    let mut failed_fibers = Vec::new();
    for (name, tier) in &results {
        match *tier {
            "collapse" => collapse_tier += 1,
            "homology-point" => homology_tier += 1,
            _ => failed_fibers.push(name.clone()),
        }
    }
    let fibers_pass = failed_fibers.is_empty();
    let betti_source = capped_betti(source);
    let betti_target = capped_betti(target);
    let betti_equal = match (&betti_source, &betti_target) {
        (Some(s), Some(t)) => Some(s == t),
        _ => None,
    };
    let pass = fibers_pass && betti_equal.unwrap_or(true);
    // contractible fibers force equal homology; flag the engine if not
    if let Some(eq) = betti_equal {
        assert!(
            !fibers_pass || eq,
            "quillen fibers contractible but Betti vectors differ: {:?} vs {:?}",
            betti_source, betti_target
        );
    }
    QuillenReport {
        direction,
        fibers_total: results.len(),
        collapse_tier,
        homology_tier,
        failed_fibers,
        betti_source,
        betti_target,
        betti_equal,
        pass,
    }
}

/// Fixed-point level of a two-level check.
#[derive(Clone, Debug)]
pub enum FixedLevel {
    /// Both actions are free; the fixed level is vacuous and the check
    /// reduces to an ordinary homotopy comparison.
    FreeVacuous,
    Compared {
        source: Option<BettiVector>,
        target: Option<BettiVector>,
        equal: bool,
    },
}

impl FixedLevel {
    pub fn pass(&self) -> bool {
        match self {
            FixedLevel::FreeVacuous => true,
            FixedLevel::Compared { equal, .. } => *equal,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            FixedLevel::FreeVacuous => "both actions free; fixed level vacuous".into(),
            FixedLevel::Compared { source, target, equal } => {
                let s = source.as_ref().map_or("empty".into(), |b| b.to_string());
                let t = target.as_ref().map_or("empty".into(), |b| b.to_string());
                format!("fixed-level Betti {s} vs {t} ({})", if *equal { "equal" } else { "differ" })
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct BredonReport {
    pub equivariant: bool,
    pub betti_source: Option<BettiVector>,
    pub betti_target: Option<BettiVector>,
    pub betti_equal: Option<bool>,
    pub quillen: Option<QuillenReport>,
    pub fixed_level: FixedLevel,
    pub pass: bool,
}

/// Fixed-point model of a Z2-poset, as the order complex of its
/// invariant-chain poset, without materialising the full order complex.
/// For a monotone action an invariant chain is pointwise fixed (a monotone
/// bijection of a finite chain is the identity), so the invariant chains
/// are exactly the chains of the fixed subposet; for antitone actions the
/// direct model is used and must fit the budget.
fn fixed_model_betti(q: &z2_core::Z2Poset) -> Option<Option<BettiVector>> {
    match q.kind() {
        z2_core::ActionKind::Monotone => {
            let fix = q.fixed_subposet();
            if fix.is_empty() {
                return Some(None);
            }
            // invariant-face poset = face poset of the order complex of
            // the fixed subposet; its order complex is the subdivision
            let model = fix
                .order_complex()
                .ok()?
                .barycentric_subdivision()
                .ok()?;
            Some(Some(reduced_betti(&model)))
        }
        z2_core::ActionKind::Antitone => {
            q.poset().count_chains_capped(CHAIN_BUDGET)?;
            let complex = q.order_z2complex().ok()?;
            Some(complex.fixed_point_complex().map(|k| reduced_betti(&k)))
        }
    }
}

/// Two-level equivalence check of an equivariant monotone map: ordinary
/// homotopy evidence on the total posets (Betti equality plus an optional
/// Quillen certificate) and on the fixed-point models. When both actions
/// are free the fixed level is vacuous.
pub fn bredon_check(
    m: &EquivariantMap,
    quillen_direction: Option<FiberDirection>,
    seed: u64,
    restarts: u32,
) -> Result<BredonReport, VerifyError> {
    // construction already verified equivariance; re-assert cheaply
    let equivariant = (0..m.source().poset().len())
        .all(|x| m.apply(m.source().omega(x)) == m.target().omega(m.apply(x)));

    let betti_source = capped_betti(m.source().poset());
    let betti_target = capped_betti(m.target().poset());
    let betti_equal = match (&betti_source, &betti_target) {
        (Some(s), Some(t)) => Some(s == t),
        _ => None,
    };

    let quillen = quillen_direction.map(|dir| quillen_check(m.monotone(), dir, seed, restarts));

    let fs = fixed_model_betti(m.source());
    let ft = fixed_model_betti(m.target());
    let fixed_level = match (fs, ft) {
        (Some(None), Some(None)) => FixedLevel::FreeVacuous,
        (Some(s), Some(t)) => {
            let equal = s == t;
            FixedLevel::Compared {
                source: s,
                target: t,
                equal,
            }
        }
        _ => FixedLevel::Compared {
            source: None,
            target: None,
            equal: false, // over budget on an antitone side; fail loudly
        },
    };

    let pass = equivariant
        && betti_equal.unwrap_or(true)
        && quillen.as_ref().is_none_or(|q| q.pass)
        && fixed_level.pass();
    Ok(BredonReport {
        equivariant,
        betti_source,
        betti_target,
        betti_equal,
        quillen,
        fixed_level,
        pass,
    })
}

#[derive(Clone, Debug)]
pub struct OrderHomotopyReport {
    /// Which side was the identity, if either.
    pub retract_side: Option<&'static str>,
    pub betti_image: Option<BettiVector>,
    pub betti_whole: Option<BettiVector>,
    pub pass: bool,
}

/// Order-homotopy (deformation) check for comparable monotone self-maps
/// `f <= g`. When either side is the identity, the other's image must be a
/// deformation retract, verified at the homology level.
pub fn order_homotopy_check(
    f: &MonotoneMap,
    g: &MonotoneMap,
) -> Result<OrderHomotopyReport, VerifyError> {
    if f.source() != g.source() || f.target() != g.target() || f.source() != f.target() {
        return Err(VerifyError::MapMismatch);
    }
    let p = f.source();
    for x in 0..p.len() {
        if !p.leq(f.apply(x), g.apply(x)) {
            return Err(VerifyError::PointwiseOrderViolated(p.label(x).to_string()));
        }
    }
    let retracting = if g.is_identity() {
        Some(("f", f))
    } else if f.is_identity() {
        Some(("g", g))
    } else {
        None
    };
    match retracting {
        Some((side, h)) => {
            let image = p.induced(&h.image());
            let betti_image = reduced_betti(&image.order_complex()?);
            let betti_whole = reduced_betti(&p.order_complex()?);
            let pass = betti_image == betti_whole;
            Ok(OrderHomotopyReport {
                retract_side: Some(side),
                betti_image: Some(betti_image),
                betti_whole: Some(betti_whole),
                pass,
            })
        }
        None => {
            // premises hold; report image homology informationally
            let betti_image = reduced_betti(&p.induced(&f.image()).order_complex()?);
            let betti_whole = reduced_betti(&p.induced(&g.image()).order_complex()?);
            Ok(OrderHomotopyReport {
                retract_side: None,
                betti_image: Some(betti_image),
                betti_whole: Some(betti_whole),
                pass: true,
            })
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenSimplexReport {
    pub maximal: bool,
    pub rest_tier: &'static str,
    pub sphere_dim: usize,
    pub betti_matches_sphere: bool,
    pub pass: bool,
}

/// Certifies a generating simplex: `sigma` must be maximal and the complex
/// minus `sigma` must carry contractibility evidence, which exhibits the
/// complex as a sphere of dimension `dim sigma`. Cross-asserts the homology.
pub fn generating_simplex_check(
    k: &SimplicialComplex,
    sigma: &[u32],
    seed: u64,
    restarts: u32,
) -> Result<GenSimplexReport, VerifyError> {
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if !k.is_face(&sorted) {
        return Err(VerifyError::NotAFace(
            sorted.iter().map(|&v| k.label(v).to_string()).collect(),
        ));
    }
    let maximal = k.facets().contains(&sorted);
    let faces: Vec<Vec<u32>> = k
        .all_faces()
        .into_iter()
        .filter(|f| *f != sorted)
        .collect();
    let rest = SimplicialComplex::from_closed_faces(k.labels().to_vec(), faces)?;
    let verdict = collapsibility(&rest, seed, restarts);
    let rest_tier = verdict.tier();
    let sphere_dim = sorted.len() - 1;
    let betti_matches_sphere = reduced_betti(k) == BettiVector::sphere(sphere_dim);
    let pass = maximal && verdict.is_contractible_evidence() && betti_matches_sphere;
    if maximal && verdict.is_contractible_evidence() {
        assert!(
            betti_matches_sphere,
            "generating simplex certified but homology is not that of S^{sphere_dim}"
        );
    }
    Ok(GenSimplexReport {
        maximal,
        rest_tier,
        sphere_dim,
        betti_matches_sphere,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use poset_core::Poset;
    use z2_core::{sigma_map, theta_map, ActionKind, WiPoset, Z2Poset};

    fn path3_neighborhood() -> WiPoset {
        let labels = vec![
            "{1}".to_string(),
            "{2}".to_string(),
            "{3}".to_string(),
            "{1,3}".to_string(),
        ];
        let poset = Poset::from_index_pairs(labels, vec![(0, 3), (2, 3)]).unwrap();
        WiPoset::new(poset, vec![1, 3, 1, 1]).unwrap()
    }

    #[test]
    fn theta_quillen_passes_on_path3() {
        let m = theta_map(&path3_neighborhood());
        let q = quillen_check(m.monotone(), FiberDirection::Upper, 42, 8);
        assert!(q.pass, "failed fibers: {:?}", q.failed_fibers);
        assert_eq!(q.collapse_tier, q.fibers_total);
    }

    #[test]
    fn sigma_quillen_passes_on_tiny_antitone_poset() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        let q = Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap();
        let m = sigma_map(&q).unwrap();
        let rep = quillen_check(m.monotone(), FiberDirection::Upper, 42, 8);
        assert!(rep.pass);
    }

    #[test]
    fn constant_map_from_disconnected_source_fails_quillen() {
        let s0 = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        let pt = Poset::from_index_pairs(vec!["p".into()], vec![]).unwrap();
        let f = MonotoneMap::new(s0, pt, vec![0, 0]).unwrap();
        let rep = quillen_check(&f, FiberDirection::Lower, 42, 8);
        assert!(!rep.pass);
        assert_eq!(rep.failed_fibers, vec!["p".to_string()]);
    }

    #[test]
    fn bredon_passes_on_identity() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        let q = Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap();
        let m = z2_core::EquivariantMap::new(q.clone(), q, (0..2).collect()).unwrap();
        let rep = bredon_check(&m, None, 42, 8).unwrap();
        assert!(rep.pass);
        assert!(matches!(rep.fixed_level, FixedLevel::FreeVacuous));
    }

    #[test]
    fn bredon_on_sigma_with_fixed_points() {
        // 2-chain with the swap: the interval and chain posets both have a
        // one-point fixed model
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        let q = Z2Poset::new(p, vec![1, 0], ActionKind::Antitone).unwrap();
        let m = sigma_map(&q).unwrap();
        let rep = bredon_check(&m, Some(FiberDirection::Upper), 42, 8).unwrap();
        assert!(rep.pass);
        match rep.fixed_level {
            FixedLevel::Compared { equal, .. } => assert!(equal),
            FixedLevel::FreeVacuous => panic!("expected fixed points"),
        }
    }

    #[test]
    fn order_homotopy_certifies_square_retraction() {
        // C^2 on the path-3 neighborhood poset retracts onto the square-fixed part
        let w = path3_neighborhood();
        let p = w.poset().clone();
        let csq: Vec<usize> = (0..p.len()).map(|x| w.c(w.c(x))).collect();
        let f = MonotoneMap::identity(&p);
        let g = MonotoneMap::new(p.clone(), p.clone(), csq).unwrap();
        let rep = order_homotopy_check(&f, &g).unwrap();
        assert_eq!(rep.retract_side, Some("g"));
        assert!(rep.pass);
    }

    #[test]
    fn order_homotopy_rejects_incomparable_pair() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
        let f = MonotoneMap::new(p.clone(), p.clone(), vec![0, 0]).unwrap();
        let g = MonotoneMap::new(p.clone(), p, vec![1, 1]).unwrap();
        assert!(matches!(
            order_homotopy_check(&f, &g),
            Err(VerifyError::PointwiseOrderViolated(_))
        ));
    }

    #[test]
    fn order_homotopy_identity_pair() {
        let p = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        let f = MonotoneMap::identity(&p);
        let rep = order_homotopy_check(&f, &f.clone()).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn monotone_fixed_shortcut_matches_direct_model() {
        // the fixed model of a monotone action equals the subdivided fixed
        // subposet; check both routes on a half-fixed example
        let p = Poset::from_index_pairs(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![(0, 1)],
        )
        .unwrap();
        let q = Z2Poset::new(p, vec![0, 1, 3, 2], ActionKind::Monotone).unwrap();
        // direct: invariant faces of the order complex
        let direct = q
            .order_z2complex()
            .unwrap()
            .fixed_point_complex()
            .map(|k| homology_engine::reduced_betti(&k));
        // shortcut: subdivision of the fixed subposet
        let fix = q.fixed_subposet();
        let shortcut = Some(homology_engine::reduced_betti(
            &fix.order_complex()
                .unwrap()
                .barycentric_subdivision()
                .unwrap(),
        ));
        assert_eq!(direct, shortcut);

        // and on the identity action, where everything is fixed
        let p2 = Poset::from_index_pairs(
            vec!["x".into(), "y".into(), "z".into()],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        let idq = Z2Poset::new(p2, vec![0, 1, 2], ActionKind::Monotone).unwrap();
        let direct = idq
            .order_z2complex()
            .unwrap()
            .fixed_point_complex()
            .map(|k| homology_engine::reduced_betti(&k));
        let shortcut = Some(homology_engine::reduced_betti(
            &idq.fixed_subposet()
                .order_complex()
                .unwrap()
                .barycentric_subdivision()
                .unwrap(),
        ));
        assert_eq!(direct, shortcut);
    }

    #[test]
    fn generating_simplex_on_hollow_triangle_edge() {
        let k = SimplicialComplex::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        let rep = generating_simplex_check(&k, &[0, 1], 42, 8).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.sphere_dim, 1);
    }

    #[test]
    fn generating_simplex_rejects_non_face() {
        let k = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        assert!(matches!(
            generating_simplex_check(&k, &[0, 1], 42, 8),
            Err(VerifyError::NotAFace(_))
        ));
    }
}
