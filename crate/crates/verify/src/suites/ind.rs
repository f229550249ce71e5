//! Independence complexes of cycles and paths on 6p-1 vertices: sphere
//! homology, fixed-set spheres under the reversal, and certified generating
//! simplices.

use graph_complexes::{
    cycle_graph, deletion_decomposition, generating_simplex_formula, ind_complex, path_graph,
    reversal_involution, DeletionCut,
};
use homology_engine::{reduced_betti, BettiVector};
use rayon::prelude::*;
use z2_core::Z2Complex;

use crate::checks::generating_simplex_check;
use crate::report::{BettiLine, InstanceReport, VerificationReport};
use crate::suites::{util, SuiteParams};
use crate::VerifyError;

fn ind_instance(
    name: &str,
    x: &Z2Complex,
    p: usize,
    seed: u64,
    restarts: u32,
) -> InstanceReport {
    let mut inst = InstanceReport::new(name.to_string());
    let (betti, _) = util::complex_line(&mut inst, "complex", x);
    let want = BettiVector::sphere(2 * p - 1);
    inst.check("sphere", betti == want, format!("{betti} vs {want}"));
    match x.fixed_point_complex() {
        Some(fixed) => {
            let bf = reduced_betti(&fixed);
            inst.betti_line(BettiLine::new("fixed", &bf, Some(&fixed)));
            let want_fixed = BettiVector::sphere(p - 1);
            inst.check(
                "fixed-sphere",
                bf == want_fixed,
                format!("{bf} vs {want_fixed}"),
            );
        }
        None => inst.check("fixed-sphere", false, "fixed set unexpectedly empty"),
    }
    let sigma_labels = generating_simplex_formula(p);
    let sigma: Vec<u32> = sigma_labels
        .iter()
        .map(|v| x.complex().index_of(&v.to_string()).unwrap())
        .collect();
    match generating_simplex_check(x.complex(), &sigma, seed, restarts) {
        Ok(rep) => {
            inst.check(
                "generating-simplex",
                rep.pass,
                format!(
                    "sigma {:?} maximal={} rest={} sphere-dim {}",
                    sigma_labels, rep.maximal, rep.rest_tier, rep.sphere_dim
                ),
            );
            inst.check(
                "generating-simplex-dim",
                rep.sphere_dim == 2 * p - 1,
                format!("{} vs {}", rep.sphere_dim, 2 * p - 1),
            );
        }
        Err(e) => inst.check("generating-simplex", false, e.to_string()),
    }
    // the formula is palindromic, hence the simplex is invariant
    let inv = x.apply_face(&sigma) == {
        let mut s = sigma.clone();
        s.sort_unstable();
        s
    };
    inst.check("sigma-invariant", inv, "reversal fixes the generating simplex");
    inst
}

pub fn ind_suite(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("ind", params.seed);
    report.param("p_max", params.p);
    report.corpus_hash = format!("p<=:{}", params.p);
    let specs: Vec<(String, usize, bool)> = (1..=params.p)
        .flat_map(|p| {
            let n = 6 * p - 1;
            [
                (format!("ind(cycle[{n}])"), p, true),
                (format!("ind(path[{n}])"), p, false),
            ]
        })
        .collect();
    let instances: Vec<InstanceReport> = specs
        .par_iter()
        .map(|(name, p, is_cycle)| {
            let n = 6 * p - 1;
            let g = if *is_cycle {
                cycle_graph(n).unwrap()
            } else {
                path_graph(n).unwrap()
            };
            let x = ind_complex(&g, Some(&reversal_involution(n))).unwrap();
            ind_instance(name, &x, *p, params.seed, params.restarts)
        })
        .collect();
    report.extend(instances);

    // star decompositions along a vertex and along an edge, checked as
    // exact face-set identities
    for p in 1..=params.p {
        let n = 6 * p - 1;
        let g = cycle_graph(n).unwrap();
        let mut inst = InstanceReport::new(format!("deletion(cycle[{n}])"));
        match deletion_decomposition(&g, DeletionCut::Vertex(0)) {
            Ok(d) => inst.check(
                "vertex-union-identity",
                d.union_holds,
                format!("{} intersection faces", d.intersection_faces.len()),
            ),
            Err(e) => inst.check("vertex-union-identity", false, e.to_string()),
        }
        match deletion_decomposition(&g, DeletionCut::Edge(0, n - 1)) {
            Ok(d) => inst.check(
                "edge-union-identity",
                d.union_holds,
                format!("{} intersection faces", d.intersection_faces.len()),
            ),
            Err(e) => inst.check("edge-union-identity", false, e.to_string()),
        }
        report.push(inst);
    }
    Ok(report)
}
