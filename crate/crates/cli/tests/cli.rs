use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn kminv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kminv")).args(args).output().unwrap()
}

fn run_on(cmd: &str, file: &str, extra: &[&str]) -> Output {
    let path = fixture(file);
    let mut args = vec![cmd, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    kminv(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_a2() {
    let o = run_on("classify", "a2.json", &[]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), r#"{"type":"Finite","blocks":[[1,2]]}"#);
}

#[test]
fn subalgebra_example_matches_expected_b() {
    let o = run_on("subalgebra", "nonsym3.json", &[]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let expected: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("nonsym3_b.json")).unwrap()).unwrap();
    assert_eq!(v["b"], expected["a"]);
    assert_eq!(v["type"], "Indefinite");
    assert_eq!(v["symmetrizable"], false);
    assert_eq!(v["labeling"], serde_json::json!([1, 2, 3]));
}

#[test]
fn verify_passes_on_rank_two() {
    let o = run_on("verify", "a23.json", &["--max-degree", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn verify_passes_on_every_fixture() {
    for f in ["a2.json", "a22.json", "nonsym3.json", "cycle4.json", "infinite3.json", "sym3.json"] {
        let o = run_on("verify", f, &["--max-degree", "4", "--max-length", "8"]);
        assert_eq!(o.status.code(), Some(0), "{f}: {}", stdout(&o));
    }
}

#[test]
fn output_is_deterministic() {
    for cmd in ["classify", "symmetrize", "invariants", "poincare", "cohomology", "verify"] {
        let args = ["--max-length", "8", "--seed", "7"];
        let a = run_on(cmd, "nonsym3.json", &args);
        let b = run_on(cmd, "nonsym3.json", &args);
        assert!(a.status.success(), "{cmd}");
        assert_eq!(a.stdout, b.stdout, "{cmd}");
    }
}

#[test]
fn text_format() {
    let o = run_on("cohomology", "a23.json", &["--format", "text"]);
    let s = stdout(&o);
    assert!(s.contains("H*(F(A)) = Q[w1..w2]/<psi>"), "{s}");
    assert!(s.contains("Lambda[y3]"), "{s}");
    let o = run_on("symmetrize", "nonsym3.json", &["--format", "text"]);
    assert_eq!(stdout(&o), "symmetrizable: no\n");
}

#[test]
fn poincare_reports_generator_counts() {
    let o = run_on("poincare", "infinite3.json", &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["epsilon"], 0);
    assert_eq!(v["i_even"]["4"], 0);
    assert_eq!(v["i_even"]["6"], 2);
    assert_eq!(v["reconstruction_ok"], true);
    assert_eq!(v["flag_series"][2], 3);
}

#[test]
fn grid_input_is_accepted() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# rank two\n2, -2\n-3, 2").unwrap();
    let o = kminv(&["symmetrize", "--input", f.path().to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), r#"{"symmetrizable":true,"d":["1","3/2"]}"#);
}

fn exit_code_for(contents: &str, cmd: &str) -> i32 {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{contents}").unwrap();
    kminv(&[cmd, "--input", f.path().to_str().unwrap()]).status.code().unwrap()
}

#[test]
fn errors_map_to_distinct_codes() {
    let cases = [
        (exit_code_for("{\"n\": 2, \"a\": [[2]]}", "classify"), 4),
        (exit_code_for("2 -1\n0 2", "classify"), 5),
        (exit_code_for("2 0\n0 2", "cohomology"), 6),
        (exit_code_for("2 -2\n-2 2", "cohomology"), 7),
        (exit_code_for("2 -1\n-1 2", "poincare"), 0),
        (exit_code_for("2 -1 -1\n-1 2 -1\n-2 -1 2", "invariants"), 0),
        (exit_code_for("2 -1 0\n-1 2 -1\n0 -1 2", "subalgebra"), 10),
        (exit_code_for("2 -2 -1\n-2 2 -1\n-1 -1 2", "subalgebra"), 10),
        (exit_code_for("2 -3\n-3 2", "subalgebra"), 14),
    ];
    for (i, (got, want)) in cases.iter().enumerate() {
        assert_eq!(got, want, "case {i}");
    }
    assert_eq!(kminv(&["classify", "--input", "/does/not/exist"]).status.code(), Some(3));
    assert_eq!(kminv(&["classify"]).status.code(), Some(3));
    assert_eq!(kminv(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run_on("poincare", "a2.json", &["--max-length", "0"]).status.code(), Some(2));
}

#[test]
fn help_documents_exit_codes() {
    let s = stdout(&kminv(&["--help"]));
    for code in 0..=14 {
        assert!(s.contains(&format!("\n  {code:>2}  ")), "code {code} missing from help");
    }
}
