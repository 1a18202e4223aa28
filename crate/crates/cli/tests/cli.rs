use hopfnf::{InputDocument, Options, OutputFormat};
use std::path::PathBuf;
use std::process::Command;

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfnf")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code, not a signal"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn write_tmp(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hopfnf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn ks_normalize() {
    let (code, out, _) = bin(&["normalize", "--example", "ks", "--degree", "6", "--style", "I"]);
    assert_eq!(code, 0);
    assert!(out.contains("case: iii (r=1, s=1, p=4)"), "{out}");
    assert!(out.contains(
        "simplest: 1/2*F[-1,0] + 1*Θ[0,0] + -4/3*F[1,1] + -2/3*E[1,1] + 187/15*F[3,3] + 1*Θ[4,4] + 317590969/473850*F[5,5]"
    ));
}

#[test]
fn classify_examples() {
    let (code, out, _) = bin(&["classify", "--example", "ks"]);
    assert_eq!(code, 0);
    assert_eq!(out, "case iii (r=1, s=1, p=4)\na_s/b_s = 2\n");
    let (code, out, _) = bin(&["classify", "--example", "rossler", "--a", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("case iii"), "{out}");
    let p = write_tmp("case_i.json", r#"{"element": {"Θ[0,0]": "1", "F[-1,0]": "1", "F[1,1]": "2", "E[2,2]": "-1/3"}}"#);
    let (code, out, _) = bin(&["classify", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("case i (r=1, s=2"), "{out}");
}

#[test]
fn json_report_is_deterministic() {
    let args = ["normalize", "--example", "rossler", "--a", "-1", "--output", "json"];
    let (c1, a, _) = bin(&args);
    let (c2, b, _) = bin(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["case"]["variant"], "iii");
    assert!(v["linear_transform"].is_array());
}

#[test]
fn example_document_round_trips() {
    for args in [["example", "--example", "ks", "--a", "1"], ["example", "--example", "rossler", "--a", "-1/5"]] {
        let (code, out, _) = bin(&args);
        assert_eq!(code, 0);
        let doc = InputDocument::parse(&out).unwrap();
        assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", out);
        let p = write_tmp(&format!("{}.json", args[2]), &out);
        let from_file = bin(&["normalize", "--input", p.to_str().unwrap(), "--output", "cylindrical"]);
        let from_example = bin(&["normalize", "--example", args[2], "--a", args[4], "--output", "cylindrical"]);
        assert_eq!(from_file.0, 0);
        assert_eq!(from_file.1, from_example.1);
    }
}

#[test]
fn wrong_linear_part_is_a_precondition() {
    let p = write_tmp("lin.json", r#"{"variables": ["x","y","z"], "equations": {"x": [["1", [1,0,0]]], "y": [["1", [0,0,1]]], "z": [["-1", [0,1,0]]]}}"#);
    let (code, _, err) = bin(&["normalize", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("linear part"), "{err}");
}

#[test]
fn missing_f_minus1_is_a_precondition() {
    let p = write_tmp("a0.json", r#"{"element": {"Θ[0,0]": "1", "E[1,1]": "1"}}"#);
    assert_eq!(bin(&["normalize", "--input", p.to_str().unwrap()]).0, 2);
    let p = write_tmp("deg.json", r#"{"element": {"Θ[0,0]": "1", "F[-1,0]": "1", "F[1,1]": "1"}}"#);
    assert_eq!(bin(&["normalize", "--input", p.to_str().unwrap()]).0, 2);
}

#[test]
fn malformed_inputs_exit_1() {
    let cases = [
        "not json",
        r#"{"variables": ["x","y"], "equations": {"x": [["1", [0,2,0]]]}}"#,
        r#"{"variables": ["x","y","z"], "equations": {"x": [[0.5, [0,2,0]]]}}"#,
        r#"{"variables": ["x","y","z"], "equations": {"x": [["0.5", [0,2,0]]]}}"#,
        r#"{"variables": ["x","y","z"], "equations": {"w": [["1", [0,2,0]]]}}"#,
        r#"{"element": {"G[0,0]": "1"}}"#,
        r#"{"element": {"F[3,1]": "1"}}"#,
        r#"{"element": {"F[-1,0]": "1/0"}}"#,
        r#"{}"#,
        r#"{"element": {"F[-1,0]": "1"}, "extra": 1}"#,
    ];
    for (i, text) in cases.iter().enumerate() {
        let p = write_tmp(&format!("bad{i}.json"), text);
        let (code, _, err) = bin(&["normalize", "--input", p.to_str().unwrap()]);
        assert_eq!(code, 1, "{text}: {err}");
        assert!(!err.contains("panicked"));
    }
    assert_eq!(bin(&["normalize", "--input", "/nonexistent/x.json"]).0, 1);
    assert_eq!(bin(&["normalize", "--example", "lorenz"]).0, 1);
    assert_eq!(bin(&["normalize", "--example", "ks", "--style", "III"]).0, 1);
    assert_eq!(bin(&["normalize", "--example", "ks", "--output", "xml"]).0, 1);
    assert_eq!(bin(&["normalize"]).0, 1);
    assert_eq!(bin(&["verify", "--suite", "nope"]).0, 1);
    assert_eq!(bin(&["frobnicate"]).0, 1);
}

#[test]
fn precondition_exits() {
    assert_eq!(bin(&["normalize", "--example", "ks", "--degree", "1"]).0, 2);
    assert_eq!(bin(&["normalize", "--example", "rossler", "--a", "1/2"]).0, 2);
    assert_eq!(bin(&["normalize", "--example", "rossler", "--a", "3"]).0, 2);
}

#[test]
fn bt_reduce_examples() {
    let p = write_tmp("fm.json", r#"{"element": {"F[-1,0]": "1"}}"#);
    let (code, out, _) = bin(&["bt-reduce", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "planar (x, rho): x' = 2*rho^2; rho' = 0\nBogdanov-Takens (xb, yb): xbar' = 0; ybar' = 2*xbar\nlabels: 2*A^1_0\n");
    let p = write_tmp("e00.json", r#"{"element": {"E[0,0]": "1"}}"#);
    let (code, out, _) = bin(&["bt-reduce", "--input", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("labels: 1*B^0_0"), "{out}");
    let p = write_tmp("zero.json", r#"{"element": {"F[-1,0]": "0"}}"#);
    assert_eq!(bin(&["bt-reduce", "--input", p.to_str().unwrap()]).0, 2);
    assert_eq!(bin(&["bt-reduce", "--example", "ks"]).0, 0);
}

#[test]
fn verify_suites() {
    let (code, out, _) = bin(&["verify", "--suite", "integrals"]);
    assert_eq!(code, 0, "{out}");
    // the printed triad relations fail, the bracket oracle passes
    let (code, out, _) = bin(&["verify", "--suite", "structure"]);
    assert_eq!(code, 3);
    assert!(out.contains("PASS structure constants vs coordinates"));
    assert!(out.contains("FAIL sl(2) triad relations"));
}

#[test]
fn case_ii_defaults_to_style_ii() {
    let p = write_tmp("ii.json", r#"{"element": {"Θ[0,0]": "1", "F[-1,0]": "1", "E[1,1]": "1", "F[2,2]": "2"}}"#);
    let opts = Options { input: Some(p.clone()), output: OutputFormat::Json, ..Options::default() };
    let out = hopfnf::normalize(&opts).unwrap();
    let v: serde_json::Value = serde_json::from_str(&out.text).unwrap();
    assert_eq!(v["style"], "II");
    assert_eq!(v["experimental"], false);
    assert!(v["notices"][0].as_str().unwrap().contains("style II"));
    let opts = Options { style: Some("I".into()), ..opts };
    let v: serde_json::Value = serde_json::from_str(&hopfnf::normalize(&opts).unwrap().text).unwrap();
    assert_eq!(v["experimental"], true);
}
