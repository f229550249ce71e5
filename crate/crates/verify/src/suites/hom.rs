//! Hom complexes and G-deleted joins: the factorization of extended Hom
//! complexes over complete targets into joins of independence complexes, and
//! the join distributivity law.

use graph_complexes::{
    cycle_graph, g_deleted_join, hom_ex_complex, hom_poset, ind_complex, path_graph, Graph,
};
use homology_engine::{join_complexes, reduced_betti, BettiVector};
use poset_core::SimplicialComplex;

use crate::report::{BettiLine, InstanceReport, VerificationReport};
use crate::suites::SuiteParams;
use crate::VerifyError;

fn n_fold_join_of_ind(g: &Graph, n: usize) -> SimplicialComplex {
    let ind = ind_complex(g, None).unwrap().complex().clone();
    let mut acc = ind.clone();
    for _ in 1..n {
        acc = join_complexes(&acc, &ind).unwrap();
    }
    acc
}

pub fn hom_suite(params: &SuiteParams) -> Result<VerificationReport, VerifyError> {
    let mut report = VerificationReport::new("hom", params.seed);
    report.corpus_hash = "fixed-instances".into();

    // factorization instances: extended Hom over a complete target is the
    // n-fold join of the independence complex
    for (name, g, n, want) in [
        ("homex(c5,k2)", cycle_graph(5).unwrap(), 2, BettiVector::sphere(3)),
        ("homex(k2,k2)", Graph::complete(2), 2, BettiVector::sphere(1)),
        ("homex(k2,k3)", Graph::complete(2), 3, BettiVector::sphere(2)),
    ] {
        let mut inst = InstanceReport::new(name.to_string());
        match hom_ex_complex(&g, &Graph::complete(n)) {
            Ok(k) => {
                let bh = reduced_betti(&k);
                inst.betti_line(BettiLine::new("hom_ex", &bh, Some(&k)));
                let join = n_fold_join_of_ind(&g, n);
                let bj = reduced_betti(&join);
                inst.betti_line(BettiLine::new("ind-join", &bj, Some(&join)));
                inst.check("factorization", bh == bj, format!("{bh} vs {bj}"));
                inst.check("expected", bh == want, format!("{bh} vs {want}"));
            }
            Err(e) => inst.check("construction", false, e.to_string()),
        }
        report.push(inst);
    }

    // Hom(K2, K3): the hexagonal multihomomorphism poset
    {
        let mut inst = InstanceReport::new("hom(k2,k3)".to_string());
        match hom_poset(&Graph::complete(2), &Graph::complete(3)) {
            Ok(hp) => {
                let k = hp.poset.order_complex().unwrap();
                let b = reduced_betti(&k);
                inst.betti_line(BettiLine::new("hom", &b, Some(&k)));
                inst.check("circle", b == BettiVector::sphere(1), b.to_string());
                inst.check("swap-attached", hp.swap.is_some(), "");
                // with an edge as source this is the box poset of the target
                let wp = graph_complexes::neighborhood_poset(&Graph::complete(3)).unwrap();
                let bx = z2_core::box_poset(&wp);
                inst.check(
                    "matches-box-poset",
                    hp.poset.len() == bx.poset().len()
                        && b == reduced_betti(&bx.poset().order_complex().unwrap()),
                    format!("{} vs {} elements", hp.poset.len(), bx.poset().len()),
                );
            }
            Err(e) => inst.check("construction", false, e.to_string()),
        }
        report.push(inst);
    }

    // Hom(K3, K2) is empty: the triangle has no 2-colouring
    {
        let mut inst = InstanceReport::new("hom(k3,k2)".to_string());
        match hom_poset(&Graph::complete(3), &Graph::complete(2)) {
            Ok(hp) => {
                inst.betti_line(BettiLine::empty("hom"));
                inst.check("empty", hp.poset.is_empty(), format!("{} elements", hp.poset.len()));
            }
            Err(e) => inst.check("construction", false, e.to_string()),
        }
        report.push(inst);
    }

    // join distributivity of the deleted join on small instances
    {
        let mut inst = InstanceReport::new("deleted-join-law".to_string());
        let s0 = SimplicialComplex::new(vec!["a".into(), "b".into()], vec![]).unwrap();
        let edge = SimplicialComplex::new(vec!["x".into(), "y".into()], vec![vec![0, 1]]).unwrap();
        for (gname, g) in [
            ("k2", Graph::complete(2)),
            ("path3", path_graph(3).unwrap()),
            ("k3", Graph::complete(3)),
        ] {
            let kl = join_complexes(&s0, &edge).unwrap();
            let left = g_deleted_join(&kl, &g).unwrap();
            let right = join_complexes(
                &g_deleted_join(&s0, &g).unwrap(),
                &g_deleted_join(&edge, &g).unwrap(),
            )
            .unwrap();
            let bl = reduced_betti(&left);
            let br = reduced_betti(&right);
            inst.check(
                &format!("join-law[{gname}]"),
                bl == br,
                format!("{bl} vs {br}"),
            );
        }
        // the deleted join of a point is the independence complex
        for (gname, g) in [("c5", cycle_graph(5).unwrap()), ("path4", path_graph(4).unwrap())] {
            let pt = SimplicialComplex::new(vec!["p".into()], vec![]).unwrap();
            let join = g_deleted_join(&pt, &g).unwrap();
            let ind = ind_complex(&g, None).unwrap();
            inst.check(
                &format!("point-join-is-ind[{gname}]"),
                reduced_betti(&join) == reduced_betti(ind.complex()),
                "",
            );
        }
        report.push(inst);
    }
    Ok(report)
}
