//! End-to-end tests against the compiled binary: golden bytes for the
//! documented outputs, exit codes, and determinism across runs.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_treewalk"))
}

fn write_tree(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(text.as_bytes()).unwrap();
    path
}

fn p4(dir: &TempDir) -> PathBuf {
    write_tree(dir, "p4.txt", "4\n0 1\n1 2\n2 3\n")
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn meet_emits_documented_bytes() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let out = run(bin().arg("meet").arg("--tree").arg(&tree));
    assert!(out.status.success());
    assert_eq!(
        out.stdout,
        b"{\"jmax\":\"35\",\"tmeet\":\"35/6\",\"tmeet_decimal\":5.833333333333333,\"argmax\":[0,3]}\n"
    );
}

#[test]
fn meet_best_extends_the_report() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let out = run(bin().args(["meet", "--best", "--tree"]).arg(&tree));
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["jmin"], "11");
    assert_eq!(value["tbestmeet"], "11/6");
    assert_eq!(value["argmin"], serde_json::json!([1, 2]));
}

#[test]
fn meet_csv_uses_key_value_rows() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let out = run(bin().args(["meet", "--format", "csv", "--tree"]).arg(&tree));
    assert!(out.status.success());
    assert_eq!(
        stdout_str(&out),
        "key,value\njmax,35\ntmeet,35/6\ntmeet_decimal,5.833333333333333\nargmax,0 3\n"
    );
}

#[test]
fn family_value_emits_documented_bytes() {
    let out = run(bin().args([
        "family", "--kind", "broom", "--n", "8", "--d", "3", "--emit", "value",
    ]));
    assert!(out.status.success());
    assert_eq!(out.stdout, b"{\"jmax\":\"295\",\"tmeet\":\"295/14\"}\n");
}

#[test]
fn family_tree_round_trips_through_meet() {
    let out = run(bin().args([
        "family", "--kind", "double_broom", "--n", "8", "--d", "4", "--l", "3", "--r", "2",
        "--emit", "tree",
    ]));
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "8\n0 1\n1 2\n1 5\n1 6\n2 3\n3 4\n3 7\n");

    let dir = TempDir::new().unwrap();
    let tree = write_tree(&dir, "db.txt", &stdout_str(&out));
    let meet = run(bin().arg("meet").arg("--tree").arg(&tree));
    assert!(meet.status.success());
    let value: serde_json::Value = serde_json::from_slice(&meet.stdout).unwrap();
    assert_eq!(value["jmax"], "303");
}

#[test]
fn family_rejects_inconsistent_parameters() {
    let out = run(bin().args([
        "family", "--kind", "double_broom", "--n", "8", "--d", "4", "--l", "9", "--r", "2",
    ]));
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
}

#[test]
fn hit_profile_formula_and_solver_agree() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let formula = run(bin().args(["hit", "--target", "3", "--tree"]).arg(&tree));
    assert!(formula.status.success());
    assert_eq!(
        stdout_str(&formula),
        "{\"target\":3,\"times\":[\"9\",\"8\",\"5\",\"0\"]}\n"
    );
    let solve = run(bin().args(["hit", "--target", "3", "--method", "solve", "--tree"]).arg(&tree));
    assert_eq!(formula.stdout, solve.stdout);

    let single = run(bin().args(["hit", "--target", "3", "--source", "0", "--tree"]).arg(&tree));
    assert_eq!(
        stdout_str(&single),
        "{\"source\":0,\"target\":3,\"hitting\":\"9\"}\n"
    );
}

#[test]
fn hit_csv_lists_one_row_per_vertex() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let out = run(bin().args(["hit", "--target", "3", "--format", "csv", "--tree"]).arg(&tree));
    assert_eq!(stdout_str(&out), "vertex,time\n0,9\n1,8\n2,5\n3,0\n");
}

#[test]
fn verify_min_reports_the_balanced_near_double_broom() {
    let out = run(bin().args(["verify", "min", "--n", "8", "--d", "4"]));
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["agrees"], true);
    assert_eq!(value["unique"], true);
    assert_eq!(value["extremal_value"], 279);
    assert_eq!(value["expected_family"]["kind"], "balanced_near_double_broom");
}

#[test]
fn verify_order_nests_both_reports() {
    let out = run(bin().args(["verify", "order", "--n", "8"]));
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["min"]["extremal_value"], 175);
    assert_eq!(value["max"]["extremal_value"], 455);
    assert_eq!(value["min"]["agrees"], true);
    assert_eq!(value["max"]["unique"], true);
}

#[test]
fn surgery_sigma_rehangs_the_stray_leaf() {
    let dir = TempDir::new().unwrap();
    let spider = write_tree(&dir, "spider.txt", "7\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n");
    let out = run(bin().args(["surgery", "sigma", "--leaf", "6", "--tree"]).arg(&spider));
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "7\n0 1\n0 3\n0 5\n0 6\n1 2\n3 4\n");
}

#[test]
fn surgery_tau_shifts_a_spine_leaf() {
    let dir = TempDir::new().unwrap();
    let cat = write_tree(&dir, "cat.txt", "7\n0 1\n1 2\n2 3\n3 4\n4 5\n2 6\n");
    let out = run(bin().args(["surgery", "tau", "--move", "2,1", "--tree"]).arg(&cat));
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "7\n0 1\n1 2\n1 6\n2 3\n3 4\n4 5\n");

    let three = run(bin()
        .args(["surgery", "tau", "--move", "2,1", "--move", "2,3", "--move", "2,1", "--tree"])
        .arg(&cat));
    assert_eq!(three.status.code(), Some(2));
}

#[test]
fn surgery_move_reattaches_next_to_the_target() {
    let dir = TempDir::new().unwrap();
    let cat = write_tree(&dir, "cat.txt", "7\n0 1\n1 2\n2 3\n3 4\n4 5\n2 6\n");
    let out = run(bin().args(["surgery", "move", "--leaf", "6", "--to", "4", "--tree"]).arg(&cat));
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "7\n0 1\n1 2\n2 3\n3 4\n4 5\n4 6\n");
}

#[test]
fn enumerate_counts_match_known_values() {
    let out = run(bin().args(["enumerate", "--n", "8", "--count-only"]));
    assert!(out.status.success());
    assert_eq!(stdout_str(&out), "{\"n\":8,\"count\":23}\n");

    let listed = run(bin().args(["enumerate", "--n", "8", "--d", "3"]));
    let value: serde_json::Value = serde_json::from_slice(&listed.stdout).unwrap();
    assert_eq!(value["count"], 3);
    assert_eq!(value["codes"].as_array().unwrap().len(), 3);

    let csv = run(bin().args(["enumerate", "--n", "4", "--format", "csv"]));
    assert_eq!(stdout_str(&csv), "code\n((())())\n(()()())\n");
}

#[test]
fn simulate_is_deterministic_and_consistent() {
    let dir = TempDir::new().unwrap();
    let tree = p4(&dir);
    let args = ["simulate", "--source", "0", "--target", "3", "--walks", "20000", "--seed", "5"];
    let first = run(bin().args(args).arg("--tree").arg(&tree));
    let second = run(bin().args(args).arg("--tree").arg(&tree));
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let value: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    let mean = value["mean"].as_f64().unwrap();
    let stderr = value["stderr"].as_f64().unwrap();
    assert!((mean - 9.0).abs() <= 3.0 * stderr);
}

#[test]
fn lemmas_report_passes_on_a_caterpillar() {
    let dir = TempDir::new().unwrap();
    let cat = write_tree(&dir, "cat.txt", "7\n0 1\n1 2\n2 3\n3 4\n4 5\n2 6\n");
    let out = run(bin().arg("lemmas").arg("--tree").arg(&cat));
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = value["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    for check in checks {
        assert_eq!(check["status"], "pass", "{check}");
    }
}

#[test]
fn enumeration_cap_comes_from_the_environment()  {
    let over = run(bin()
        .env("TREEWALK_ENUM_CAP", "7")
        .args(["enumerate", "--n", "8", "--count-only"]));
    assert_eq!(over.status.code(), Some(1));

    let junk = run(bin()
        .env("TREEWALK_ENUM_CAP", "many")
        .args(["enumerate", "--n", "8", "--count-only"]));
    assert_eq!(junk.status.code(), Some(2));

    let raised = run(bin()
        .env("TREEWALK_ENUM_CAP", "11")
        .args(["enumerate", "--n", "11", "--count-only"]));
    assert!(raised.status.success());
    assert_eq!(stdout_str(&raised), "{\"n\":11,\"count\":235}\n");
}

#[test]
fn exit_codes_separate_usage_from_computation() {
    let usage = run(bin().arg("frobnicate"));
    assert_eq!(usage.status.code(), Some(2));

    let missing_flag = run(bin().args(["hit", "--target", "3"]));
    assert_eq!(missing_flag.status.code(), Some(2));

    let missing_file = run(bin().args(["hit", "--target", "3", "--tree", "no-such-file.txt"]));
    assert_eq!(missing_file.status.code(), Some(1));

    let dir = TempDir::new().unwrap();
    let cyclic = write_tree(&dir, "bad.txt", "3\n0 1\n1 2\n2 0\n");
    let invalid = run(bin().args(["meet", "--tree"]).arg(&cyclic));
    assert_eq!(invalid.status.code(), Some(1));
    assert!(String::from_utf8(invalid.stderr).unwrap().starts_with("error:"));
}
