use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../core/fixtures");
    p.push(format!("{name}.arr"));
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrgm")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON on stdout");
    assert_eq!(v["schema"], "arrgm-report/1");
    (out.status.code().unwrap(), v)
}

fn temp(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn sets(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|e| e["set"].as_str().unwrap().to_string()).collect()
}

#[test]
fn analyze_selberg() {
    let (code, v) = json(&["analyze", &fixture("selberg")]);
    assert_eq!(code, 0);
    assert_eq!(sets(&v["dep_star"]), ["126", "135", "245", "346"]);
    assert_eq!(v["bnbc_count"], 2);
    assert_eq!(v["os_dimensions"], serde_json::json!([1, 5, 6]));
}

#[test]
fn analyze_general_position() {
    let f = temp("5 2\n1 1 1\n1 2 4\n1 3 9\n1 4 16\n1 5 25\n");
    let (code, v) = json(&["analyze", f.path().to_str().unwrap(), "--seed", "3"]);
    assert_eq!(code, 0);
    assert!(v["dep_star"].as_array().unwrap().is_empty());
    assert_eq!(v["bnbc_count"], 6);
    assert_eq!(v["nonresonance"]["nonresonant"], true);
    assert!(v["nonresonance"]["weights"].as_array().unwrap().iter().all(|w| w.as_str().unwrap().contains('/')));
}

#[test]
fn malformed_rational_is_a_parse_error() {
    let f = temp("2 1\n1 1/x\n1 2\n");
    let (code, v) = json(&["analyze", f.path().to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "parse_error");
    assert!(v["error"]["message"].as_str().unwrap().contains("line 2"));

    let out = run(&["analyze", "/nonexistent/file.arr"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn principal_table() {
    let (_, v) = json(&["principal", &fixture("example_a"), &fixture("example_a1")]);
    assert_eq!(v["principal"], serde_json::json!({"set": "345", "r": 2}));

    let (_, v) = json(&["principal", &fixture("example_a"), &fixture("example_a2")]);
    let cands: Vec<(String, u64)> = v["candidates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| (c["set"].as_str().unwrap().to_string(), c["r"].as_u64().unwrap()))
        .collect();
    assert_eq!(cands, [("12".to_string(), 1), ("124".to_string(), 2), ("125".to_string(), 2)]);
    assert_eq!(v["principal"], serde_json::json!({"set": "12", "r": 1}));
}

#[test]
fn identical_types_are_not_a_degeneration() {
    let (code, v) = json(&["principal", &fixture("example_a"), &fixture("example_a")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "not_a_degeneration");
}

#[test]
fn spectra_of_the_five_line_examples() {
    let cases = [
        ("selberg", "selberg_degenerate", "345", 2, 0),
        ("tbar", "tbar_degenerate", "345", 2, 1),
        ("tbar", "selberg", "126", 1, 2),
    ];
    for (t, tp, s, l, z) in cases {
        for seed in ["0", "5"] {
            let (code, v) = json(&["spectrum", &fixture(t), &fixture(tp), "--seed", seed]);
            assert_eq!(code, 0);
            assert_eq!(v["principal"]["set"], s);
            assert_eq!(v["multiplicity_lambda_s"], l);
            assert_eq!(v["multiplicity_zero"], z);
            assert_eq!(v["diagonalizable"], true);
            let lambda_s = v["lambda_s"].as_str().unwrap();
            assert_eq!(v["monodromy"][1]["eigenvalue"], format!("exp(-2*pi*i*({lambda_s}))"));
            assert!(v.get("bases").is_none());
        }
    }
}

#[test]
fn bases_are_reported_on_request() {
    let (_, v) = json(&["spectrum", &fixture("tbar"), &fixture("tbar_degenerate"), "--bases"]);
    let b = &v["bases"];
    assert_eq!(b["omega"].as_array().unwrap().len(), 3);
    assert_eq!(b["zero"].as_array().unwrap().len(), 1);
    assert_eq!(b["lambda_s"].as_array().unwrap().len(), 2);
}

#[test]
fn listed_degeneration_matches_realized_one() {
    let listed = temp("dep 5 2\n# the degenerate Selberg type\n1,2,6 1\n1,3,4 1\n1,3,4,5 2\n1,3,5 1\n1,4,5 1\n2,3,4 1\n2,3,4,5 2\n2,3,5 1\n2,4,5 1\n3,4 1\n3,4,5 2\n3,4,5,6 2\n3,4,6 1\n3,5 1\n3,5,6 1\n4,5 1\n4,5,6 1\n");
    let realized = run(&["--json", "spectrum", &fixture("selberg"), &fixture("selberg_degenerate")]);
    let from_list = run(&["--json", "spectrum", &fixture("selberg"), listed.path().to_str().unwrap()]);
    assert!(realized.status.success(), "{}", String::from_utf8_lossy(&realized.stdout));
    assert_eq!(realized.stdout, from_list.stdout);
}

#[test]
fn vanishing_lambda_s_is_a_contract_violation() {
    // λ_3 + λ_4 + λ_5 = 0
    let w = temp("-1/7 -1/5 -1/3 1/6 1/6\n");
    let (code, v) = json(&[
        "spectrum",
        &fixture("selberg"),
        &fixture("selberg_degenerate"),
        "--weights",
        w.path().to_str().unwrap(),
    ]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "lambda_s_zero");
}

#[test]
fn resonant_weights_are_rejected() {
    // λ_1 = 1 is a nonnegative integer on a dense edge
    let w = temp("1 -1/5 -1/3 -1/7 -1/11\n");
    let (code, v) = json(&["spectrum", &fixture("selberg"), &fixture("selberg_degenerate"), "--weights", w.path().to_str().unwrap()]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["code"], "nonresonance_violated");
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["--json", "analyze", "--seed", "4"],
        vec!["spectrum", "--bases", "--seed", "9"],
    ] {
        let mut a = args.clone();
        a.push(Box::leak(fixture("tbar").into_boxed_str()));
        if args.contains(&"spectrum") {
            a.push(Box::leak(fixture("selberg").into_boxed_str()));
        }
        let first = run(&a);
        let second = run(&a);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout);
    }
}
