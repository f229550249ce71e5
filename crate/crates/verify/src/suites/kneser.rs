//! Kneser comparison suite: the union-of-members maps and the
//! coordinate-projection map are certified equivalences, and the
//! representative-based complexes match the graph-based avatars.

use graph_complexes::{
    b_chain_kg, b_sark_kg, kneser_graph, lambda_map, phi_map, psi_map,
};
use rayon::prelude::*;

use crate::checks::{bredon_check, FiberDirection};
use crate::report::{InstanceReport, VerificationReport};
use crate::rng;
use crate::suites::poset_suites::record_bredon;
use crate::suites::{util, SuiteParams};
use crate::VerifyError;

pub fn kneser_suite(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let families = util::kneser_families();
    let mut report = VerificationReport::new("kneser", params.seed);
    report.param("families", families.len());
    report.corpus_hash = format!(
        "fnv1a:{:016x}",
        families
            .iter()
            .fold(0xcbf29ce484222325u64, |h, (n, _)| h ^ rng::hash_str(n))
    );
    let instances: Vec<InstanceReport> = families
        .par_iter()
        .map(|(name, family)| {
            let mut inst = InstanceReport::new(name.clone());
            let kg = kneser_graph(family).unwrap();
            if kg.edge_count() == 0 {
                inst.note("no-edges", "Kneser graph is edgeless");
                return inst;
            }
            let wp = graph_complexes::neighborhood_poset(&kg).unwrap();
            let box_complex = z2_core::box_poset(&wp).order_z2complex().unwrap();
            let (bc, _) = util::complex_line(&mut inst, "box_chain", &box_complex);
            let b0 = crate::suites::avatar_suites::b0_reference(&mut inst, &kg, &bc);
            let (bkg, _) =
                util::complex_line(&mut inst, "b_chain_kg", &b_chain_kg(family).unwrap());
            let (bsk, _) = util::complex_line(&mut inst, "b_sark_kg", &b_sark_kg(family).unwrap());
            inst.check("chain-naturality", bkg == bc, format!("{bkg} vs {bc}"));
            inst.check("sark-naturality", bsk == b0, format!("{bsk} vs {b0}"));

            match phi_map(family) {
                Ok(m) => match bredon_check(&m, Some(FiberDirection::Lower), params.seed, params.restarts) {
                    Ok(b) => {
                        inst.note("phi", "union-of-members map into the chain-style poset");
                        record_bredon(&mut inst, &b);
                    }
                    Err(e) => inst.check("phi-bredon", false, e.to_string()),
                },
                Err(e) => inst.check("phi", false, e.to_string()),
            }
            match psi_map(family) {
                Ok(m) => match bredon_check(&m, Some(FiberDirection::Lower), params.seed, params.restarts) {
                    Ok(b) => {
                        inst.note("psi", "union-of-members map into the Sarkaria-style poset");
                        record_bredon(&mut inst, &b);
                    }
                    Err(e) => inst.check("psi-bredon", false, e.to_string()),
                },
                Err(e) => inst.check("psi", false, e.to_string()),
            }
            match lambda_map(&kg) {
                Ok(m) => match bredon_check(&m, Some(FiberDirection::Lower), params.seed, params.restarts) {
                    Ok(b) => {
                        inst.note("lambda", "coordinate projection from the edge box complex");
                        record_bredon(&mut inst, &b);
                    }
                    Err(e) => inst.check("lambda-bredon", false, e.to_string()),
                },
                Err(e) => inst.check("lambda", false, e.to_string()),
            }
            inst
        })
        .collect();
    report.extend(instances);
    Ok(report)
}
