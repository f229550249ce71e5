//! End-to-end checks of the binary: exit codes, envelope shape, and a few
//! pinned output values.

use std::io::Write;
use std::process::Command;

fn gcl(args: &[&str]) -> (i32, serde_json::Value, String) {
    let output = Command::new(env!("CARGO_BIN_EXE_gcl"))
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8_lossy(&output.stdout).to_string();
    let stderr = String::from_utf8_lossy(&output.stderr).to_string();
    let json = serde_json::from_str(&stdout).unwrap_or(serde_json::Value::Null);
    (output.status.code().unwrap_or(-1), json, stderr)
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("gcl-test-{}-{name}", std::process::id()));
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    path
}

fn betti_of<'a>(body: &'a serde_json::Value, name: &str) -> &'a serde_json::Value {
    body["betti"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["name"] == name)
        .unwrap_or_else(|| panic!("no betti line `{name}`"))
        .get("betti")
        .unwrap()
}

#[test]
fn avatars_on_a_path() {
    let path = temp_file("path3", "1 2\n2 3\n");
    let (code, json, _) = gcl(&["avatars", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(json["schema"], 1);
    assert_eq!(betti_of(&json["body"], "box_chain"), &serde_json::json!([1]));
    assert_eq!(betti_of(&json["body"], "b0"), &serde_json::json!([0, 1]));
    assert!(json["body_checksum"].as_str().unwrap().starts_with("fnv1a:"));
}

#[test]
fn avatars_rejects_edgeless_input() {
    let path = temp_file("lonely", "p 1 0\n");
    let (code, _, stderr) = gcl(&["avatars", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no edges"));
}

#[test]
fn malformed_graph_file_is_a_usage_error() {
    let path = temp_file("bad", "1 2 3 4\n");
    let (code, _, _) = gcl(&["avatars", path.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn ind_path_four_is_contractible() {
    let (code, json, _) = gcl(&["ind", "--path", "4"]);
    assert_eq!(code, 0);
    assert_eq!(betti_of(&json["body"], "complex"), &serde_json::json!([0]));
}

#[test]
fn ind_budget_guard() {
    let (code, _, stderr) = gcl(&["ind", "--cycle", "17"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("budget"));
    let (code, json, _) = gcl(&["ind", "--cycle", "17", "--large"]);
    assert_eq!(code, 0);
    assert_eq!(
        betti_of(&json["body"], "complex"),
        &serde_json::json!([0, 0, 0, 0, 0, 1])
    );
}

#[test]
fn kneser_box_of_the_matching_family() {
    let (code, json, _) = gcl(&["kneser", "--n", "4", "--k", "2", "--complex", "box"]);
    assert_eq!(code, 0, "{json}");
    assert_eq!(betti_of(&json["body"], "box_chain"), &serde_json::json!([5]));
}

#[test]
fn betti_command_reads_complex_files() {
    let path = temp_file(
        "square",
        r#"{"vertices":["1","2","3","4"],"facets":[["1","2"],["2","3"],["3","4"],["1","4"]]}"#,
    );
    let (code, json, _) = gcl(&["betti", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(betti_of(&json["body"], "complex"), &serde_json::json!([0, 1]));
}

#[test]
fn csorba_rejects_non_free_input() {
    let path = temp_file(
        "pinned",
        r#"{"vertices":["a","b"],"facets":[["a"],["b"]],"involution":"identity"}"#,
    );
    let (code, _, stderr) = gcl(&["csorba", "--complex", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("free"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let (code, _, _) = gcl(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_suite_runs_and_reports() {
    let (code, json, _) = gcl(&[
        "verify", "--suite", "ind", "--p", "1", "--seed", "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(json["body"]["suite"], "ind");
    assert_eq!(json["body"]["seed"], 7);
    assert_eq!(json["body"]["pass"], true);
}

#[test]
fn out_flag_writes_the_report() {
    let out = std::env::temp_dir().join(format!("gcl-out-{}.json", std::process::id()));
    let (code, _, _) = gcl(&[
        "ind", "--path", "4", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    let _ = std::fs::remove_file(out);
}
