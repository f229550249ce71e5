//! Fat-semilattice machinery: fatness verdicts with witnesses, the
//! compatibility-graph adjacency table, and the interval formula for double
//! neighbor sets on the standing face semilattices.

use graph_complexes::{compatibility_graph, is_fat, nn_closure, FreeISemilattice};
use poset_core::{Poset, SimplicialComplex};
use z2_core::Z2Complex;

use crate::report::{InstanceReport, VerificationReport};
use crate::suites::csorba::standing_complexes;
use crate::suites::SuiteParams;
use crate::VerifyError;

pub fn fatlat_suite(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("fatlat", params.seed);
    report.corpus_hash = "standing-free-complexes".into();

    // fatness verdicts
    {
        let mut inst = InstanceReport::new("fatness".to_string());
        let two = Poset::from_index_pairs(vec!["a".into(), "b".into()], vec![(0, 1)]).unwrap();
        inst.check("height-two-vacuous", is_fat(&two).0, "");
        let chain3 = Poset::from_index_pairs(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1), (1, 2)],
        )
        .unwrap();
        let (fat, witness) = is_fat(&chain3);
        inst.check(
            "three-chain-fails",
            !fat && witness == Some(("a".into(), "b".into(), "c".into())),
            format!("{witness:?}"),
        );
        let triangle = SimplicialComplex::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec![0, 1], vec![0, 2], vec![1, 2]],
        )
        .unwrap();
        inst.check(
            "triangle-boundary-fat",
            is_fat(&triangle.face_poset_by_inclusion().unwrap()).0,
            "",
        );
        report.push(inst);
    }

    // construction errors must fire on fixed points
    {
        let mut inst = InstanceReport::new("free-validation".to_string());
        let k = SimplicialComplex::new(vec!["a".into()], vec![]).unwrap();
        let fixed = FreeISemilattice::from_z2complex(&Z2Complex::identity_action(k));
        inst.check(
            "fixed-point-rejected",
            matches!(fixed, Err(graph_complexes::GraphError::NotFree(_))),
            "",
        );
        report.push(inst);
    }

    // standing semilattices: fat, adjacency table, interval formula
    for (name, k) in standing_complexes() {
        let mut inst = InstanceReport::new(format!("semilattice({name})"));
        let l = FreeISemilattice::from_z2complex(&k).unwrap();
        inst.check("fat", is_fat(l.poset()).0, "");
        let gl = compatibility_graph(&l).unwrap();
        inst.note(
            "compatibility-graph",
            format!("{} vertices, {} edges", gl.vertex_count(), gl.edge_count()),
        );
        if name == "square-antipodal" {
            let v1 = gl.index_of("{v1}").unwrap();
            let mut nb: Vec<&str> = (0..gl.vertex_count())
                .filter(|&v| gl.has_edge(v1, v))
                .map(|v| gl.label(v))
                .collect();
            nb.sort_unstable();
            inst.check(
                "adjacency-table",
                nb == vec!["{v2,v3}", "{v3,v4}", "{v3}"],
                format!("{nb:?}"),
            );
        }
        if name == "two-swapped-points" {
            inst.check(
                "k2",
                gl.vertex_count() == 2 && gl.edge_count() == 1,
                "compatibility graph of two swapped points",
            );
        }
        let n = l.poset().len();
        let mut ok = true;
        for i in 0..n {
            for j in i..n {
                let a = if i == j { vec![i] } else { vec![i, j] };
                match nn_closure(&l, &a) {
                    Ok(res) => ok &= res.matches,
                    Err(e) => {
                        ok = false;
                        inst.note("nn-error", format!("A={a:?}: {e}"));
                    }
                }
            }
        }
        inst.check("interval-formula", ok, "all |A| <= 2");
        report.push(inst);
    }
    Ok(report)
}
