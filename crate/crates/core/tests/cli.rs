use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steenrod")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn ring(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "rings", name].iter().collect();
    p.to_string_lossy().into_owned()
}

#[test]
fn normalize_examples() {
    assert_eq!(stdout(&["normalize", "Sq2 Sq2"]), "Sq3 Sq1");
    assert_eq!(stdout(&["normalize", "S3"]), "Sq7 Sq3");
    assert_eq!(stdout(&["normalize", "Sq1 Sq1"]), "0");
    assert_eq!(stdout(&["normalize", "Sq6 Sq4"]), "Sq7 Sq3");
}

#[test]
fn act_examples() {
    assert_eq!(stdout(&["act", "--ring", &ring("poly4.ring"), "Sq3 Sq1", "x1*x2"]), "x1^4*x2^2 + x1^2*x2^4");
    assert_eq!(
        stdout(&["act", "--ring", &ring("bielliptic.ring"), "Sq1", "gamma*delta"]),
        "alpha*delta*gamma + beta*delta*gamma"
    );
    assert_eq!(stdout(&["act", "--ring", &ring("bielliptic.ring"), "1", "alpha*delta"]), "alpha*delta");
    assert_eq!(stdout(&["act", "--ring", &ring("point_class.ring"), "Sq2", "lambda"]), "0");
}

#[test]
fn ideal_and_basis() {
    assert_eq!(stdout(&["ideal", "Sq3 Sq3"]), "yes");
    assert_eq!(stdout(&["ideal", "Sq2"]), "no");
    assert_eq!(stdout(&["ideal", "--which", "two-sided", "Sq3"]), "yes");
    assert_eq!(stdout(&["basis", "4"]), "Sq4\nSq3 Sq1");
    assert_eq!(
        stdout(&["basis", "--ring", &ring("bielliptic.ring"), "8"]),
        "alpha^3*beta*delta*delta'*gamma*gamma'"
    );
}

#[test]
fn verify_json_lines() {
    let text = stdout(&["verify", "prop-5-3", "--format", "json-lines"]);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["check", "params", "status", "witness", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
        assert_eq!(v["status"], "pass");
    }
    assert!(text.contains("alpha^3*beta*delta*gamma"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "consistency", "--ring", &ring("inconsistent.ring")]).status.code(), Some(1));
    let bad = run(&["normalize", "Sq2 Sqx"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("column"));
    assert_eq!(run(&["verify", "lemma-4-1", "--s", "2", "--j", "3"]).status.code(), Some(2));
    assert_eq!(run(&["basis", "--ring", &ring("poly4.ring"), "3"]).status.code(), Some(2));
}

#[test]
fn model_matches_bundled_file() {
    let printed = stdout(&["model"]);
    let parsed = steenrod::parse_presentation(&printed).unwrap();
    assert_eq!(parsed.id(), steenrod::suite::build_bielliptic_model().id());
}
