use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn gentle(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gentle")).args(args).output().expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), json, String::from_utf8(out.stderr).unwrap())
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn every_subcommand_succeeds_on_the_example() {
    let ex = path("example.gentle");
    for args in [
        vec!["validate", &ex],
        vec!["cycles", &ex],
        vec!["gp", &ex],
        vec!["dsg", &ex],
        vec!["stable", &ex],
        vec!["dim", &ex],
        vec!["ext", &ex, "--word", "i,d,a,f,k"],
        vec!["oracle", &ex, "--max-letters", "3", "--field", "Fp"],
    ] {
        let (code, v, _) = gentle(&args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert_eq!(v["status"], "ok");
    }
}

#[test]
fn documented_examples() {
    let (_, v, _) = gentle(&["dsg", &path("example.gentle")]);
    assert_eq!(v["descriptor"], serde_json::json!([3, 3]));
    let (_, v, _) = gentle(&["cycles", &path("a2.gentle")]);
    assert_eq!(v["cycles"], serde_json::json!([]));
    let (code, v, _) = gentle(&["oracle", &path("example.gentle"), "--max-letters", "6", "--bound", "9"]);
    assert_eq!(code, 0);
    assert_eq!(v["agreement"], true);
    assert_eq!(v["counts"]["gp_by_period"]["3"], 6);
    let periodic = v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["verdict"] == "GP" && c["period"]["length"] == 3)
        .count();
    assert_eq!(periodic, 6);
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["oracle", &path("lambda3.gentle"), "--max-letters", "4"];
    let a = Command::new(env!("CARGO_BIN_EXE_gentle")).args(args).output().unwrap().stdout;
    let b = Command::new(env!("CARGO_BIN_EXE_gentle")).args(args).output().unwrap().stdout;
    assert_eq!(a, b);
}

#[test]
fn pretty_output() {
    let out = Command::new(env!("CARGO_BIN_EXE_gentle"))
        .args(["--pretty", "cycles", &path("example.gentle")])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().count() > 3);
    let flat = gentle(&["cycles", &path("example.gentle")]).1;
    assert_eq!(serde_json::from_str::<Value>(&text).unwrap(), flat);
}

#[test]
fn not_gentle_exits_two() {
    let (code, v, _) = gentle(&["validate", &path("three_arrows.gentle")]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "not-gentle");
    assert_eq!(v["violations"][0]["axiom"], "G1");
    assert_eq!(v["violations"][0]["witness"]["vertex"], "1");

    let (code, v, _) = gentle(&["gp", &path("loop.gentle")]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "not-gentle");
    assert_eq!(v["violations"][0]["axiom"], "infinite-dimensional");

    let dir = tempfile::tempdir().unwrap();
    let f =
        write(&dir, "g3.gentle", "vertices: 1, 2, 3\narrows: a: 1 -> 2; b: 2 -> 3; c: 2 -> 3\nrelations: b*a, c*a\n");
    let (code, v, _) = gentle(&["validate", &f]);
    assert_eq!(code, 2);
    assert!(v["violations"].as_array().unwrap().iter().any(|x| x["axiom"] == "G3"));
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "bad.gentle", "vertices: 1, 2\narrows: a 1 -> 2\nrelations:\n");
    let (code, v, _) = gentle(&["cycles", &f]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!((v["error"]["line"].as_u64(), v["error"]["column"].as_u64()), (Some(2), Some(11)));

    let f = write(&dir, "nc.gentle", "vertices: 1, 2, 3\narrows: a: 1 -> 2; b: 2 -> 3\nrelations: a*b\n");
    let (code, v, _) = gentle(&["validate", &f]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["line"], 3);
}

#[test]
fn missing_file_exits_two() {
    let (code, v, _) = gentle(&["dim", "/nonexistent/x.gentle"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "io");
}

#[test]
fn invalid_word_exits_two() {
    let ex = path("example.gentle");
    for w in ["b,a", "a,zz", "a,c"] {
        let (code, v, _) = gentle(&["ext", &ex, "--word", w]);
        assert_eq!(code, 2, "{w}");
        assert_eq!(v["error"]["kind"], "invalid-word");
    }
}

#[test]
fn zero_bound_exits_two() {
    let (code, v, _) = gentle(&["ext", &path("a2.gentle"), "--word", "a", "--bound", "0"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid-argument");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, stderr) = gentle(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!stderr.is_empty());
    let (code, _, _) = gentle(&["oracle", &path("a2.gentle"), "--field", "reals"]);
    assert_eq!(code, 2);
    let (code, _, _) = gentle(&[]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let out = Command::new(env!("CARGO_BIN_EXE_gentle")).arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("oracle"));
}

#[test]
fn surface_and_emitted_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hexagon.gentle").display().to_string();
    let (code, v, _) = gentle(&["surface", &path("hexagon.tri"), "--emit-algebra", &out]);
    assert_eq!(code, 0);
    assert_eq!(v["inner_triangles"]["count"], 1);
    assert_eq!(v["count_matches"], true);
    let (code, v, _) = gentle(&["dsg", &out]);
    assert_eq!(code, 0);
    assert_eq!(v["descriptor"], serde_json::json!([3]));
    let (_, v, _) = gentle(&["dim", &out]);
    assert_eq!(v["injective_dimension"], 0);

    let (code, v, _) = gentle(&["surface", &path("octagon.tri")]);
    assert_eq!(code, 0);
    assert_eq!(v["inner_triangles"]["count"], 2);
}

#[test]
fn invalid_triangulations_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let f =
        write(&dir, "three.tri", "arcs: x; boundary: p, q, r, s, u, w; triangles: (x, p, q); (x, r, s); (x, u, w)\n");
    let (code, v, _) = gentle(&["surface", &f]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid-triangulation");
    let f = write(&dir, "syntax.tri", "arcs: x\nboundary: p\ntriangles: (x, p x)\n");
    let (code, v, _) = gentle(&["surface", &f]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
    let (code, _, _) = gentle(&["surface", &f, "--emit-algebra", "/nonexistent/dir/out.gentle"]);
    assert_eq!(code, 2);
    let ok = path("hexagon.tri");
    let (code, v, _) = gentle(&["surface", &ok, "--emit-algebra", "/nonexistent/dir/out.gentle"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "io");
}

#[test]
fn compare_reports_a_witness() {
    let (code, v, _) = gentle(&["compare", &path("lambda3.gentle"), &path("lambda4.gentle")]);
    assert_eq!(code, 0);
    assert_eq!(v["compatible"], false);
    assert_eq!(v["witness"]["length"], 2);
    let (_, v, _) = gentle(&["compare", &path("example.gentle"), &path("two_triangles.gentle")]);
    assert_eq!(v["compatible"], true);
    assert_eq!(v["witness"], Value::Null);
    let (code, _, _) = gentle(&["compare", &path("example.gentle"), &path("loop.gentle")]);
    assert_eq!(code, 2);
}

#[test]
fn library_entry_point_matches_binary() {
    let ex = path("example.gentle");
    let lib = gentle_cli::run(["gentle", "gp", ex.as_str()]);
    let bin = Command::new(env!("CARGO_BIN_EXE_gentle")).args(["gp", &ex]).output().unwrap();
    assert_eq!(lib.code, 0);
    assert_eq!(lib.stdout.as_bytes(), bin.stdout.as_slice());
}
