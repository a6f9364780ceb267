//! `--json` golden outputs for every subcommand, plus text mode, stdin and
//! exit codes.

use std::path::Path;

use chenlie::cli::run;

const CONNECTION_DIAGONAL: &str = r#"{"alphabet": ["om1", "om2"], "weights": ["w1", "w2"]}"#;
const CONNECTION_GENERAL: &str =
    r#"{"alphabet": ["om1", "om2"], "delta_poly": "t^2 - 1", "matrix": [[0, 1], ["t", 0]]}"#;
const TABLE: &str =
    r#"{"alphabet": ["om", "omp"], "paths": ["a", "b"], "table": [["p", "q"], ["r", "s"]]}"#;
const MODEL: &str =
    r#"{"alphabet": ["x", "y"], "paths": ["a", "b"], "logs": {"a": "x + 1/2 [x,y]", "b": "y"}}"#;

fn call_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chenlie").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn call(args: &[&str]) -> (i32, String, String) {
    call_with_stdin(args, "")
}

struct Docs {
    _dir: tempfile::TempDir,
    diagonal: String,
    general: String,
    table: String,
    model: String,
}

fn docs() -> Docs {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    Docs {
        diagonal: write("diagonal.json", CONNECTION_DIAGONAL),
        general: write("general.json", CONNECTION_GENERAL),
        table: write("table.json", TABLE),
        model: write("model.json", MODEL),
        _dir: dir,
    }
}

fn golden(name: &str) -> String {
    let p = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    std::fs::read_to_string(p).unwrap()
}

fn check(name: &str, args: &[&str]) {
    check_with(name, args, |s| s);
}

fn check_with(name: &str, args: &[&str], fix: impl Fn(String) -> String) {
    let mut argv = vec!["--json"];
    argv.extend_from_slice(args);
    let (code, out, err) = call(&argv);
    assert_eq!(code, 0, "{name}: {err}");
    assert_eq!(fix(out.clone()), golden(name), "{name}");
    assert_eq!(call(&argv).1, out, "{name} is not byte-stable");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
}

#[test]
fn golden_hall() {
    check("hall", &["hall", "-m", "2", "-k", "4"]);
}

#[test]
fn golden_parse() {
    check("parse", &["parse", "(x,y^-1)"]);
}

#[test]
fn golden_expand() {
    check("expand", &["expand", "[x,[x,y]]"]);
}

#[test]
fn golden_shuffle() {
    check("shuffle", &["shuffle", "x y", "z"]);
}

#[test]
fn golden_pair() {
    check("pair", &["pair", "[y,[x,[x,[x,y]]]]", "[[x,y],[x,[x,y]]]"]);
}

#[test]
fn golden_islie() {
    check("islie", &["islie", "x y - y x"]);
    check("islie_false", &["islie", "x # y"]);
}

#[test]
fn golden_project() {
    check("project", &["project", "x y"]);
}

#[test]
fn golden_magnus() {
    check("magnus", &["magnus", "(x,y)", "-N", "3"]);
}

#[test]
fn golden_lcs() {
    check("lcs", &["lcs", "(((a,b),a),(a,b))"]);
}

#[test]
fn golden_eval() {
    check("eval", &["eval", "x y", "x y"]);
    let d = docs();
    let path = d.model.clone();
    check_with(
        "eval_model",
        &["eval", "--model", &d.model, "a b a^-1", "x y - y x"],
        |s| s.replace(&path, "MODEL"),
    );
}

#[test]
fn golden_pk() {
    check("pk", &["pk", "-k", "3", "--weights", "1/3,2/3", "-i", "1"]);
}

#[test]
fn golden_ck() {
    check("ck", &["ck", "-k", "4"]);
    check("ck_weights", &["ck", "-k", "3", "--weights", "1/2,1/4"]);
}

#[test]
fn golden_m5check() {
    check("m5check", &["m5check"]);
}

#[test]
fn golden_monodromy() {
    check("monodromy_reduce", &["monodromy", "reduce", "1,0,0,0,0,0"]);
    check(
        "monodromy_apply",
        &["monodromy", "apply", "-i", "2", "0,1,0,0,0,0"],
    );
}

#[test]
fn golden_derive() {
    let d = docs();
    check("derive", &["derive", "--connection", &d.general, "om1 om2"]);
}

#[test]
fn golden_integrand() {
    let d = docs();
    check(
        "integrand",
        &[
            "integrand",
            "--connection",
            &d.diagonal,
            "-k",
            "3",
            "{a1} om1 + {a2} om2",
        ],
    );
}

#[test]
fn golden_pairgraded() {
    let d = docs();
    check(
        "pairgraded",
        &["pairgraded", "--table", &d.table, "(a,b)", "om omp"],
    );
}

#[test]
fn text_mode_examples() {
    assert_eq!(call(&["pair", "[y,[x,z]]", "[z,[x,y]]"]).1, "2\n");
    assert_eq!(call(&["ck", "-k", "2"]).1, "w2 - w1\n");
    assert_eq!(call(&["m5check"]).1, "0 (identity holds)\n");
    assert_eq!(call(&["lcs", "(x,y)"]).1, "2\nleading: x y - y x\n");
}

#[test]
fn stdin_dash() {
    let (code, out, _) = call_with_stdin(&["--json", "expand", "-"], "[x,[x,y]]\n");
    assert_eq!(code, 0);
    assert_eq!(out, golden("expand"));
}

#[test]
fn exit_codes() {
    let (code, _, err) = call(&["expand", "[x,"]);
    assert_eq!(code, 1);
    assert!(err.contains("1:4"), "{err}");
    assert_eq!(call(&["ck", "-k", "1"]).0, 1);
    assert_eq!(call(&["monodromy", "reduce", "0,0,0,0,0,0"]).0, 1);
    assert_eq!(call(&["nosuch"]).0, 2);
    assert_eq!(call(&["hall", "-m", "2"]).0, 2);
    let d = docs();
    let missing = format!("{}.absent", d.table);
    assert_eq!(
        call(&["pairgraded", "--table", &missing, "(a,b)", "om omp"]).0,
        1
    );
}

#[test]
fn binary_matches_library() {
    let bin = env!("CARGO_BIN_EXE_chenlie");
    let out = std::process::Command::new(bin)
        .args(["--json", "m5check"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("m5check"));
    let bad = std::process::Command::new(bin)
        .args(["expand", "[x"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
