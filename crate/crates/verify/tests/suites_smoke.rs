//! Every named suite passes on a reduced corpus. The acceptance suite in
//! the CLI crate runs the full-scale versions.

use verify::{run_suite, SuiteName, SuiteParams};

fn small_params() -> SuiteParams {
    SuiteParams {
        seed: 42,
        max_vertices: 4,
        six_vertex_samples: 3,
        count: 25,
        p: 1,
        large: false,
        restarts: 16,
    }
}

#[test]
fn all_suites_pass_on_the_reduced_corpus() {
    for name in SuiteName::all() {
        let report = run_suite(name, &small_params()).unwrap_or_else(|e| {
            panic!("suite {} failed to run: {e}", name.as_str());
        });
        if !report.pass {
            let failing: Vec<String> = report
                .instances
                .iter()
                .filter(|i| !i.pass)
                .map(|i| {
                    let checks: Vec<String> = i
                        .checks
                        .iter()
                        .filter(|c| !c.pass)
                        .map(|c| format!("{}: {}", c.name, c.info))
                        .collect();
                    format!("{} [{}]", i.instance, checks.join("; "))
                })
                .collect();
            panic!("suite {} failed:\n{}", name.as_str(), failing.join("\n"));
        }
    }
}

#[test]
fn suite_reports_are_deterministic() {
    let a = run_suite(SuiteName::Ind, &small_params()).unwrap();
    let b = run_suite(SuiteName::Ind, &small_params()).unwrap();
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn budget_guards_fire() {
    let mut p = small_params();
    p.p = 3;
    assert!(run_suite(SuiteName::Ind, &p).is_err());
    p.p = 1;
    p.max_vertices = 6;
    assert!(run_suite(SuiteName::Theta, &p).is_err());
    p.large = true;
    p.max_vertices = 5;
    p.p = 3;
    // with --large these pass validation (not executed here to stay fast)
    assert!(p.large);
}
