//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them on success). All
//! homology assertions are exact; the only tolerances are runtime budgets.

use std::process::Command;
use std::time::{Duration, Instant};

use graph_complexes::{
    cycle_graph, generating_simplex_formula, hom_ex_complex, hom_poset,
    ind_complex, path_graph, reversal_involution, Graph, SetFamily,
};
use homology_engine::{
    boundary_matrices, euler_char, join_complexes, reduced_betti, BettiVector,
};
use verify::rng::{derive, hash_str};
use verify::{
    bredon_check, generating_simplex_check, run_suite, FiberDirection, SuiteName,
    SuiteParams,
};
use z2_core::{sigma_map, theta_map};

fn report(criterion: u32, name: &str, pass: bool, elapsed: Duration, budget: Duration) {
    println!(
        "ACCEPTANCE {criterion} ({name}): {} in {elapsed:?} (budget {budget:?})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({name}) failed");
    assert!(
        elapsed <= budget,
        "criterion {criterion} ({name}) exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

fn suite_pass(name: SuiteName, params: &SuiteParams) -> bool {
    let rep = run_suite(name, params).expect("suite runs");
    if !rep.pass {
        for i in rep.instances.iter().filter(|i| !i.pass) {
            let fails: Vec<String> = i
                .checks
                .iter()
                .filter(|c| !c.pass)
                .map(|c| format!("{}: {}", c.name, c.info))
                .collect();
            eprintln!("  failing instance {}: {}", i.instance, fails.join("; "));
        }
    }
    rep.pass
}

#[test]
fn criterion_01_barycentric_law() {
    let start = Instant::now();
    let mut rng = derive(42, hash_str("barycentric"));
    let mut pass = true;
    for i in 0..200 {
        let p = verify::corpus::random_poset(&mut rng, 7);
        let via_chains = p.chain_poset().unwrap().order_complex().unwrap();
        let via_subdivision = p
            .order_complex()
            .unwrap()
            .barycentric_subdivision()
            .unwrap();
        if !via_chains.is_isomorphic_labeled(&via_subdivision) {
            eprintln!("  mismatch at poset #{i} ({} elements)", p.len());
            pass = false;
        }
    }
    report(1, "barycentric law", pass, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_02_interval_box_isomorphism() {
    let start = Instant::now();
    let params = SuiteParams {
        count: 100,
        ..SuiteParams::default()
    };
    let pass = suite_pass(SuiteName::Omega, &params);
    report(2, "interval-box isomorphism", pass, start.elapsed(), Duration::from_secs(10));
}

#[test]
fn criterion_03_avatar_equality() {
    let start = Instant::now();
    let params = SuiteParams::default(); // exhaustive 3..5 plus 50 seeded 6-vertex
    let pass = suite_pass(SuiteName::Avatars, &params);
    report(3, "avatar equality", pass, start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_04_extended_box() {
    let start = Instant::now();
    let pass = suite_pass(SuiteName::Extended, &SuiteParams::default());
    report(4, "extended box", pass, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_05_quillen_bredon_certification() {
    let start = Instant::now();
    let mut graphs = vec![Graph::complete(2)];
    graphs.extend(verify::corpus::connected_graphs(3, 5));
    let mut pass = true;
    let mut fibers_total = 0usize;
    let mut fibers_collapse = 0usize;
    let mut absorb = |name: &str, rep: &verify::BredonReport| {
        if !rep.pass {
            eprintln!("  {name} failed");
        }
        if let Some(q) = &rep.quillen {
            fibers_total += q.fibers_total;
            fibers_collapse += q.collapse_tier;
        }
        rep.pass
    };
    for g in &graphs {
        let wp = graph_complexes::neighborhood_poset(g).unwrap();
        let theta = theta_map(&wp);
        pass &= absorb(
            "theta",
            &bredon_check(&theta, Some(FiberDirection::Upper), 42, 32).unwrap(),
        );
        let sigma = sigma_map(&wp.lovasz()).unwrap();
        pass &= absorb(
            "sigma",
            &bredon_check(&sigma, Some(FiberDirection::Upper), 42, 32).unwrap(),
        );
    }
    let families = [
        SetFamily::k_subsets(4, 2).unwrap(),
        SetFamily::k_subsets(5, 2).unwrap(),
        SetFamily::singletons(4).unwrap(),
    ];
    for f in &families {
        let phi = graph_complexes::phi_map(f).unwrap();
        pass &= absorb(
            "phi",
            &bredon_check(&phi, Some(FiberDirection::Lower), 42, 32).unwrap(),
        );
        let psi = graph_complexes::psi_map(f).unwrap();
        pass &= absorb(
            "psi",
            &bredon_check(&psi, Some(FiberDirection::Lower), 42, 32).unwrap(),
        );
    }
    let fraction = fibers_collapse as f64 / fibers_total.max(1) as f64;
    println!("  collapse tier on {fibers_collapse}/{fibers_total} fibers ({fraction:.3})");
    pass &= fraction >= 0.9;
    report(5, "quillen/bredon certification", pass, start.elapsed(), Duration::from_secs(300));
}

#[test]
fn criterion_06_independence_complexes() {
    let start = Instant::now();
    let mut pass = suite_pass(SuiteName::Ind, &SuiteParams::default());

    // pinned values, asserted directly
    let c5 = ind_complex(&cycle_graph(5).unwrap(), Some(&reversal_involution(5))).unwrap();
    pass &= reduced_betti(c5.complex()) == BettiVector::sphere(1);
    pass &= reduced_betti(&c5.fixed_point_complex().unwrap()) == BettiVector::sphere(0);
    let c11 = ind_complex(&cycle_graph(11).unwrap(), Some(&reversal_involution(11))).unwrap();
    pass &= reduced_betti(c11.complex()) == BettiVector::sphere(3);
    pass &= reduced_betti(&c11.fixed_point_complex().unwrap()) == BettiVector::sphere(1);
    let l5 = ind_complex(&path_graph(5).unwrap(), Some(&reversal_involution(5))).unwrap();
    pass &= reduced_betti(l5.complex()) == BettiVector::sphere(1);
    let l11 = ind_complex(&path_graph(11).unwrap(), Some(&reversal_involution(11))).unwrap();
    pass &= reduced_betti(l11.complex()) == BettiVector::sphere(3);

    assert_eq!(generating_simplex_formula(1), vec![2, 4]);
    assert_eq!(generating_simplex_formula(2), vec![2, 5, 7, 10]);
    for (x, sigma) in [(&c5, vec![2u32, 4]), (&c11, vec![2, 5, 7, 10])] {
        let face: Vec<u32> = sigma
            .iter()
            .map(|v| x.complex().index_of(&v.to_string()).unwrap())
            .collect();
        let rep = generating_simplex_check(x.complex(), &face, 42, 32).unwrap();
        pass &= rep.pass;
    }
    report(6, "independence complexes", pass, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_07_hom_factorization() {
    let start = Instant::now();
    let mut pass = suite_pass(SuiteName::Hom, &SuiteParams::default());

    let homex = hom_ex_complex(&cycle_graph(5).unwrap(), &Graph::complete(2)).unwrap();
    let ind5 = ind_complex(&cycle_graph(5).unwrap(), None).unwrap();
    let join = join_complexes(ind5.complex(), ind5.complex()).unwrap();
    pass &= reduced_betti(&homex) == BettiVector::sphere(3);
    pass &= reduced_betti(&join) == BettiVector::sphere(3);
    let hom23 = hom_poset(&Graph::complete(2), &Graph::complete(3)).unwrap();
    pass &= reduced_betti(&hom23.poset.order_complex().unwrap()) == BettiVector::sphere(1);
    let hom32 = hom_poset(&Graph::complete(3), &Graph::complete(2)).unwrap();
    pass &= hom32.poset.is_empty();
    report(7, "hom factorization", pass, start.elapsed(), Duration::from_secs(60));
}

#[test]
fn criterion_08_csorba_round_trip() {
    let start = Instant::now();
    let mut pass = suite_pass(SuiteName::Csorba, &SuiteParams::default());
    pass &= suite_pass(SuiteName::Fatlat, &SuiteParams::default());
    report(8, "csorba round trip", pass, start.elapsed(), Duration::from_secs(120));
}

#[test]
fn criterion_09_engine_soundness() {
    let start = Instant::now();
    let mut rng = derive(42, hash_str("engine"));
    let mut pass = true;
    for _ in 0..50 {
        let k = verify::corpus::random_complex(&mut rng, 6);
        let l = verify::corpus::random_complex(&mut rng, 6);
        for c in [&k, &l] {
            // boundary composition vanishes
            if !boundary_matrices(c).composition_is_zero() {
                eprintln!("  dd != 0 on {c:?}");
                pass = false;
            }
            // Euler characteristic against the alternating Betti sum
            let betti = reduced_betti(c);
            let mut alt = 1i64;
            for (d, &b) in betti.reduced().iter().enumerate() {
                alt += if d % 2 == 0 { b as i64 } else { -(b as i64) };
            }
            if euler_char(c) != alt {
                eprintln!("  euler mismatch on {c:?}");
                pass = false;
            }
        }
        // join shift law over the field with two elements
        let join = join_complexes(&k, &l).unwrap();
        let (bk, bl, bj) = (reduced_betti(&k), reduced_betti(&l), reduced_betti(&join));
        for deg in 0..bk.reduced().len() + bl.reduced().len() + 2 {
            let mut want = 0usize;
            for i in 0..deg {
                want += bk.get(i) * bl.get(deg - 1 - i);
            }
            if bj.get(deg) != want {
                eprintln!("  join law fails in degree {deg} on {k:?} * {l:?}");
                pass = false;
            }
        }
    }
    report(9, "engine soundness", pass, start.elapsed(), Duration::from_secs(30));
}

#[test]
fn criterion_10_determinism() {
    let start = Instant::now();
    let run = || {
        let output = Command::new(env!("CARGO_BIN_EXE_gcl"))
            .args(["verify", "--suite", "avatars", "--seed", "42"])
            .output()
            .expect("gcl runs");
        assert!(
            output.status.success(),
            "gcl verify failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        let text = String::from_utf8(output.stdout).expect("utf8 report");
        let value: serde_json::Value = serde_json::from_str(&text).expect("json envelope");
        (
            serde_json::to_string(&value["body"]).unwrap(),
            value["body_checksum"].as_str().unwrap().to_string(),
        )
    };
    let (body1, sum1) = run();
    let (body2, sum2) = run();
    let pass = body1 == body2 && sum1 == sum2;
    println!("  checksum {sum1}");
    report(10, "determinism", pass, start.elapsed(), Duration::from_secs(300));
}
