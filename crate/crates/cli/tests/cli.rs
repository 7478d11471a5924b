use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shadowlab"))
        .current_dir(corpus())
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

#[test]
fn language_lists_allowed_words() {
    let (code, v) = json(&["language", "golden_mean.json", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 8);
    assert_eq!(v["words"][0], "0000");
    let (_, v) = json(&[
        "language",
        "at_most_one_one.json",
        "--n",
        "6",
        "--minimal-forbidden",
    ]);
    let mut words: Vec<&str> = v["words"]
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w.as_str().unwrap())
        .collect();
    words.sort_by_key(|w| w.len());
    assert_eq!(words, ["11", "101", "1001", "10001", "100001"]);
}

#[test]
fn check_sft_exit_codes_follow_the_verdict() {
    let (code, v) = json(&["check-sft", "at_most_one_one.json", "--n", "4"]);
    assert_eq!(code, 1);
    assert_eq!(v["is_sft"], false);
    assert_eq!(v["witness"], "100001");
    let (code, v) = json(&["check-sft", "sofic_cover_y.json", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["is_sft"], true);
}

#[test]
fn criterion_holds_for_the_golden_mean_and_fails_for_the_sofic_shift() {
    let (code, v) = json(&[
        "criterion",
        "golden_mean.json",
        "--depths",
        "1,2",
        "--L",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "equal_at_L");
    let (code, v) = json(&[
        "criterion",
        "at_most_one_one.json",
        "--depths",
        "2,5",
        "--L",
        "14",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"]["fails"]["side"], "subset");
}

#[test]
fn stitched_shadowing_point_is_reported() {
    let (code, v) = json(&["shadow", "golden_mean.json", "--random", "6", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["mode"], "stitch");
    assert!(v["verdict"]["shadowed"]["point"].is_string());
}

#[test]
fn alp_reports_the_sofic_counterexample() {
    let (code, v) = json(&[
        "alp",
        "sofic_code.json",
        "--eps",
        "1/4",
        "--eta",
        "1/4",
        "--delta",
        "1/4",
        "--L",
        "10",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["compared"], 3);
    assert_eq!(
        v["verdict"]["counterexample"]["pattern"]
            .as_array()
            .unwrap()
            .len(),
        10
    );
    let (code, _) = json(&[
        "alp",
        "golden_mean_identity.json",
        "--eps",
        "1/4",
        "--eta",
        "1/4",
        "--delta",
        "1/4",
        "--L",
        "6",
    ]);
    assert_eq!(code, 0);
}

#[test]
fn tower_and_demo_succeed() {
    let (code, v) = json(&["tower", "golden_mean.json", "--depths", "1,2,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["built"], true);
    let (code, _) = json(&["tower", "--validate", "full_onto_golden_tower.json"]);
    assert_eq!(code, 1);
    let (code, v) = json(&["demo-sofic"]);
    assert_eq!(code, 0);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == true));
}

#[test]
fn json_output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "shadow",
        "full_shift_2.json",
        "--random",
        "12",
        "--n",
        "3",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("shadowlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("po.txt");
    let out = run(&[
        "po",
        "golden_mean.json",
        "--depth",
        "1",
        "--L",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("2 cells, 3 edges"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("shadowlab-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"kind\": 7}").unwrap();
    let out = run(&["language", bad.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    std::fs::remove_dir_all(&dir).unwrap();

    assert_eq!(
        run(&["language", "missing.json", "--n", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["language", "golden_mean.json"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "criterion",
            "golden_mean.json",
            "--depths",
            "1,2,3",
            "--L",
            "4"
        ])
        .status
        .code(),
        Some(2)
    );
}
