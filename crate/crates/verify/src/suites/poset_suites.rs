//! Suites over poset-level structure: the interval/box isomorphism, the
//! chain/interval comparison, the Lovasz-box inclusion, and the extended and
//! enriched box equivalences.

use graph_complexes::{b0_poset, neighborhood_poset};
use homology_engine::reduced_betti;
use poset_core::Poset;
use rayon::prelude::*;
use z2_core::{
    box_poset, extended_box, omega_iso, sigma_map, theta_map, two_point_extension, ActionKind,
    EquivariantMap, Z2Poset,
};

use crate::checks::{bredon_check, FiberDirection};
use crate::corpus;
use crate::report::{BettiLine, InstanceReport, VerificationReport};
use crate::rng;
use crate::suites::{util, SuiteParams};
use crate::VerifyError;

/// Exact isomorphism checks for the interval-to-box comparison on seeded
/// antitone Z2-posets.
pub fn omega(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("omega", params.seed);
    report.param("count", params.count);
    report.param("max_elements", 8);
    report.corpus_hash = format!("seeded:{}", params.seed);
    let instances: Vec<InstanceReport> = (0..params.count)
        .into_par_iter()
        .map(|i| {
            let mut rng = rng::derive(params.seed, i as u64);
            let q = corpus::random_antitone(&mut rng);
            let mut inst = InstanceReport::new(format!("antitone#{i} ({} elements)", q.poset().len()));
            match omega_iso(&q) {
                Ok(m) => {
                    inst.check("bijective", m.monotone().is_bijective(), "");
                    let inverse_monotone = check_inverse_monotone(&m);
                    inst.check("bi-monotone", inverse_monotone, "monotone with monotone inverse");
                    let equivariant = (0..m.source().poset().len()).all(|x| {
                        m.apply(m.source().omega(x)) == m.target().omega(m.apply(x))
                    });
                    inst.check("equivariant", equivariant, "");
                }
                Err(e) => inst.check("construction", false, e.to_string()),
            }
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}

fn check_inverse_monotone(m: &EquivariantMap) -> bool {
    if !m.monotone().is_bijective() {
        return false;
    }
    let src = m.source().poset();
    let tgt = m.target().poset();
    let mut inv = vec![0usize; tgt.len()];
    for x in 0..src.len() {
        inv[m.apply(x)] = x;
    }
    for a in 0..tgt.len() {
        for b in 0..tgt.len() {
            if tgt.leq(a, b) && !src.leq(inv[a], inv[b]) {
                return false;
            }
        }
    }
    true
}

/// Handpicked antitone posets that exercise nonempty fixed levels.
fn handpicked_antitone() -> Vec<(String, Z2Poset)> {
    let mut out = Vec::new();
    let two_chain = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
    out.push((
        "two-chain-swap".to_string(),
        Z2Poset::new(two_chain, vec![1, 0], ActionKind::Antitone).unwrap(),
    ));
    let four = Poset::from_index_pairs(
        vec!["a".into(), "b".into(), "c".into(), "d".into()],
        vec![(0, 1), (1, 2), (2, 3)],
    )
    .unwrap();
    out.push((
        "four-chain-antipodal".to_string(),
        Z2Poset::new(four, vec![3, 2, 1, 0], ActionKind::Antitone).unwrap(),
    ));
    let antichain = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![]).unwrap();
    out.push((
        "antichain-swap".to_string(),
        Z2Poset::new(antichain, vec![1, 0], ActionKind::Antitone).unwrap(),
    ));
    out
}

/// Bredon-certifies the chain-to-interval comparison on the graph corpus
/// (through the Lovasz posets) plus fixed-point-rich handpicked posets.
pub fn sigma(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let graphs = util::corpus_with_k2(params.max_vertices, 0, params.seed);
    let mut report = VerificationReport::new("sigma", params.seed);
    report.param("graphs", graphs.len());
    report.corpus_hash = corpus::corpus_hash(&graphs);
    let mut specs: Vec<(String, Z2Poset)> = graphs
        .iter()
        .map(|g| {
            let name = format!("lovasz({})", corpus::graph_name(g));
            (name, neighborhood_poset(g).unwrap().lovasz())
        })
        .collect();
    specs.extend(handpicked_antitone());
    let instances: Vec<InstanceReport> = specs
        .par_iter()
        .map(|(name, q)| {
            let mut inst = InstanceReport::new(name.clone());
            match sigma_map(q) {
                Ok(m) => match bredon_check(&m, Some(FiberDirection::Upper), params.seed, params.restarts) {
                    Ok(b) => record_bredon(&mut inst, &b),
                    Err(e) => inst.check("bredon", false, e.to_string()),
                },
                Err(e) => inst.check("construction", false, e.to_string()),
            }
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}

pub(crate) fn record_bredon(inst: &mut InstanceReport, b: &crate::checks::BredonReport) {
    inst.check("equivariant", b.equivariant, "");
    match (&b.betti_source, &b.betti_target) {
        (Some(s), Some(t)) => inst.check(
            "betti-equal",
            b.betti_equal.unwrap_or(false),
            format!("{s} vs {t}"),
        ),
        _ => inst.note(
            "betti-equal",
            "skipped for size; fiber certificates carry the equivalence",
        ),
    }
    if let Some(q) = &b.quillen {
        inst.check(
            "quillen",
            q.pass,
            format!(
                "{} fibers ({} collapse / {} homology), direction {}",
                q.fibers_total,
                q.collapse_tier,
                q.homology_tier,
                q.direction.as_str()
            ),
        );
    }
    inst.check("fixed-level", b.fixed_level.pass(), b.fixed_level.describe());
}

/// Bredon-certifies the inclusion of the Lovasz box poset into the full box
/// poset over the graph corpus, and certifies the square of the weak
/// involution as a deformation retraction onto the Lovasz subposet.
pub fn theta(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let graphs = util::corpus_with_k2(params.max_vertices, 0, params.seed);
    let mut report = VerificationReport::new("theta", params.seed);
    report.param("graphs", graphs.len());
    report.corpus_hash = corpus::corpus_hash(&graphs);
    let instances: Vec<InstanceReport> = graphs
        .par_iter()
        .map(|g| {
            let mut inst = InstanceReport::new(format!("theta({})", corpus::graph_name(g)));
            let wp = neighborhood_poset(g).unwrap();
            let m = theta_map(&wp);
            match bredon_check(&m, Some(FiberDirection::Upper), params.seed, params.restarts) {
                Ok(b) => record_bredon(&mut inst, &b),
                Err(e) => inst.check("bredon", false, e.to_string()),
            }
            // the square of the weak involution retracts onto its image,
            // which is exactly the Lovasz subposet
            let p = wp.poset().clone();
            let csq: Vec<usize> = (0..p.len()).map(|x| wp.c(wp.c(x))).collect();
            let id = poset_core::MonotoneMap::identity(&p);
            match poset_core::MonotoneMap::new(p.clone(), p.clone(), csq) {
                Ok(sq) => {
                    let image_is_lovasz = {
                        let mut im_labels: Vec<&str> =
                            sq.image().iter().map(|&i| p.label(i)).collect();
                        im_labels.sort_unstable();
                        let lov = wp.lovasz();
                        let mut lov_labels: Vec<&str> =
                            lov.poset().labels().iter().map(|s| s.as_str()).collect();
                        lov_labels.sort_unstable();
                        im_labels == lov_labels
                    };
                    inst.check("square-image-is-lovasz", image_is_lovasz, "");
                    match crate::checks::order_homotopy_check(&id, &sq) {
                        Ok(oh) => inst.check(
                            "square-retraction",
                            oh.pass,
                            format!(
                                "image {} vs whole {}",
                                oh.betti_image.as_ref().map_or("-".into(), |b| b.to_string()),
                                oh.betti_whole.as_ref().map_or("-".into(), |b| b.to_string())
                            ),
                        ),
                        Err(e) => inst.check("square-retraction", false, e.to_string()),
                    }
                }
                Err(e) => inst.check("square-monotone", false, e.to_string()),
            }
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}

/// Homology equality of box and extended box over the corpus, with a
/// Quillen-certified inclusion on the smaller graphs.
pub fn extended(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut graphs = util::corpus_with_k2(params.max_vertices, params.six_vertex_samples, params.seed);
    let mut report = VerificationReport::new("extended", params.seed);
    report.param("graphs", graphs.len());
    report.corpus_hash = corpus::corpus_hash(&graphs);
    let seed = params.seed;
    let restarts = params.restarts;
    let instances: Vec<InstanceReport> = std::mem::take(&mut graphs)
        .par_iter()
        .map(|g| {
            let mut inst = InstanceReport::new(format!("extended({})", corpus::graph_name(g)));
            let wp = neighborhood_poset(g).unwrap();
            let bx = box_poset(&wp);
            let ex = extended_box(&wp).unwrap();
            let bb = reduced_betti(&bx.poset().order_complex().unwrap());
            let be = reduced_betti(&ex.poset().order_complex().unwrap());
            inst.betti_line(BettiLine::new(
                "box",
                &bb,
                Some(bx.poset().order_complex().as_ref().unwrap()),
            ));
            inst.betti_line(BettiLine::new(
                "box_extended",
                &be,
                Some(ex.poset().order_complex().as_ref().unwrap()),
            ));
            inst.check("betti-equal", bb == be, format!("{bb} vs {be}"));
            if g.vertex_count() <= 4 {
                // inclusion map, fibers per the retraction argument
                let tgt_index: std::collections::HashMap<&str, usize> = (0..ex.poset().len())
                    .map(|i| (ex.poset().label(i), i))
                    .collect();
                let assignment: Vec<usize> = (0..bx.poset().len())
                    .map(|i| tgt_index[bx.poset().label(i)])
                    .collect();
                match EquivariantMap::new(bx.clone(), ex.clone(), assignment) {
                    Ok(m) => match bredon_check(&m, Some(FiberDirection::Upper), seed, restarts) {
                        Ok(b) => record_bredon(&mut inst, &b),
                        Err(e) => inst.check("bredon", false, e.to_string()),
                    },
                    Err(e) => inst.check("inclusion", false, e.to_string()),
                }
            }
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}

/// Suspension behaviour of the enriched box poset: the avatar enriched over
/// all nonempty vertex subsets carries the suspension of the box homology,
/// as does the two-minima extension it factors through.
pub fn enriched(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let graphs = util::corpus_with_k2(params.max_vertices, params.six_vertex_samples, params.seed);
    let mut report = VerificationReport::new("enriched", params.seed);
    report.param("graphs", graphs.len());
    report.corpus_hash = corpus::corpus_hash(&graphs);
    let instances: Vec<InstanceReport> = graphs
        .par_iter()
        .map(|g| {
            let mut inst = InstanceReport::new(format!("enriched({})", corpus::graph_name(g)));
            let wp = neighborhood_poset(g).unwrap();
            let bx = box_poset(&wp);
            let base = reduced_betti(&bx.poset().order_complex().unwrap());
            let shifted = base.suspension_shift();
            let b0 = b0_poset(g).unwrap();
            let bb0 = reduced_betti(&b0.poset().order_complex().unwrap());
            inst.betti_line(BettiLine::new("box", &base, None));
            inst.betti_line(BettiLine::new("b0", &bb0, None));
            inst.check(
                "b0-is-suspension",
                bb0 == shifted,
                format!("{bb0} vs shift {shifted}"),
            );
            let ext = two_point_extension(&bx).unwrap();
            let bext = reduced_betti(&ext.poset().order_complex().unwrap());
            inst.check(
                "two-minima-extension-is-suspension",
                bext == shifted,
                format!("{bext} vs shift {shifted}"),
            );
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}
