use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn skewcode(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skewcode")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_spec(dir: &Path, name: &str, json: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

const MIXED_P5_N6: &str = r#"{"p":5,"n":6,"s":4,"form":"mixed","g":"x^3 + 2*x^2 + 2*x + 1","p_poly":"x + 1","abar":"x + 1"}"#;

#[test]
fn factor_divisors_lift() {
    let out = skewcode(&["factor", "--p", "5", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x + 1\nx + 4\nx^2 + x + 1\nx^2 + 4*x + 1\n");

    let out = skewcode(&["factor", "--p", "3", "--n", "12"]);
    assert_eq!(stdout(&out), "(x + 1)^3\n(x + 2)^3\n(x^2 + 1)^3\n");

    let out = skewcode(&["divisors", "--p", "3", "--n", "4"]);
    assert_eq!(stdout(&out).lines().count(), 8);

    let out = skewcode(&["lift", "--p", "3", "--s", "2", "--n", "4", "--g1", "x + 1"]);
    assert_eq!(stdout(&out), "x + 1\nx + (1+u)\nx + (1+2*u)\n");
}

#[test]
fn code_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "mixed.json", MIXED_P5_N6);

    let out = skewcode(&["code", "info", "--spec", &spec]);
    let text = stdout(&out);
    assert!(text.contains("form: mixed"));
    assert!(text.contains("size: 390625 = 5^8"));

    let out = skewcode(&["code", "encode", "--spec", &spec, "--message", "(1+u)*x^2 + 3*u*x + (4+2*u) ; 2*x + 2"]);
    assert!(out.status.success());
    let codeword = stdout(&out).lines().next().unwrap().to_string();
    assert_eq!(codeword, "(1+u)*x^5 + 2*x^4 + (1+u)*x^3 + (4+4*u)*x^2 + 3*x + (4+3*u)");

    let out = skewcode(&["code", "check", "--spec", &spec, "--word", &codeword]);
    assert_eq!(stdout(&out), "true\n");
    let out = skewcode(&["code", "check", "--spec", &spec, "--word", "x"]);
    assert_eq!(stdout(&out), "false\n");

    let out = skewcode(&["code", "decode", "--spec", &spec, "--word", &codeword]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("error: none"));
    assert!(text.contains("message: (1+u)*x^2 + 3*u*x + (4+2*u) ; 2*x + 2"));

    let out = skewcode(&["code", "encode", "--spec", &spec, "--message", "x^3 ; 0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewcode(&["code", "encode", "--spec", &spec, "--message", "x^2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn decode_corrects_single_u_error() {
    // a cubic factor of x^13 - 1 over F_3 gives distinct single-error syndromes
    let out = skewcode(&["factor", "--p", "3", "--n", "13"]);
    let cubic = stdout(&out).lines().find(|l| l.starts_with("x^3")).unwrap().to_string();
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        dir.path(),
        "h.json",
        &format!(r#"{{"p":3,"n":13,"s":2,"form":"monic","g":"{cubic}"}}"#),
    );
    let out = skewcode(&["code", "encode", "--spec", &spec, "--message", "(1+u)*x^4 + 2*x + u"]);
    let codeword = stdout(&out).lines().next().unwrap().to_string();
    let received = format!("{codeword} + 2*u*x^12");
    let out = skewcode(&["code", "decode", "--spec", &spec, "--word", &received]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.contains("error: 2*u*x^12"));
    assert!(text.contains(&format!("codeword: {codeword}")));
    assert!(text.contains("message: (1+u)*x^4 + 2*x + u"));
}

#[test]
fn gray_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "n8.json", r#"{"p":3,"n":8,"s":2,"form":"monic","g":"x^3 + u*x^2 + x + 1"}"#);
    let out = skewcode(&["gray", "--spec", &spec, "--ell", "2"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("[16,10,4] (exhaustive)"));
    assert_eq!(lines.count(), 10);
    let out = skewcode(&["gray", "--spec", &spec, "--ell", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn search_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let args = |out: &Path, threads: &str| {
        skewcode(&[
            "search", "--p", "3", "--n", "4,6,8", "--s", "2", "--ell", "2,3", "--min-deg", "2", "--threads", threads,
            "--out", out.to_str().unwrap(),
        ])
    };
    let first = args(&a, "1");
    assert!(first.status.success());
    let second = args(&b, "3");
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(first.stdout, second.stdout);
    let records: serde_json::Value = serde_json::from_slice(&fs::read(&a).unwrap()).unwrap();
    let has = |n: u64, k: u64, d: u64| {
        records.as_array().unwrap().iter().any(|r| r["N"] == n && r["K"] == k && r["d"] == d)
    };
    assert!(has(16, 10, 4));
    assert!(has(12, 4, 6));
    assert!(has(18, 4, 11));
    assert!(stdout(&first).starts_with("p\tn\ts\tell\tgenerator\tN\tK\td\tmethod\n"));
}

#[test]
fn exit_codes() {
    let out = skewcode(&["lift", "--p", "3", "--s", "2", "--n", "4", "--g1", "x^2 +"]);
    assert_eq!(out.status.code(), Some(3));
    let out = skewcode(&["lift", "--p", "3", "--s", "2", "--n", "4", "--g1", "x^2 + x + 1"]);
    assert_eq!(out.status.code(), Some(1));
    let out = skewcode(&["lift", "--p", "3", "--s", "2", "--n", "40", "--g1", "x^20 + 2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = skewcode(&["factor", "--p", "4", "--n", "4"]);
    assert_eq!(out.status.code(), Some(1));

    let dir = tempfile::tempdir().unwrap();
    let bad = write_spec(dir.path(), "bad.json", r#"{"p":3,"n":4,"s":2,"form":"nonmonic","abar":"x^2 + x"}"#);
    let out = skewcode(&["code", "info", "--spec", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("abar"));
    let garbled = write_spec(dir.path(), "garbled.json", "{");
    assert_eq!(skewcode(&["code", "info", "--spec", &garbled]).status.code(), Some(3));
}

#[test]
fn verify_subset() {
    let out = skewcode(&["verify-paper", "--only", "1,10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.starts_with("[PASS]")));
}
