use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bialg"))
}

fn structures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../structures")
}

fn file(name: &str) -> String {
    structures().join(name).to_str().unwrap().to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(path: &std::path::Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&run(&["check", &file("mu1_2_delta_1_2.json")])), 0);

    let dir = tempfile::tempdir().unwrap();
    let mut v = json(&structures().join("mu1_2_delta_1_2.json"));
    v["comult"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!([1, 2, 2, "1"]));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let o = run(&["check", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL"));

    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"name\": ").unwrap();
    assert_eq!(code(&run(&["check", junk.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["check", "/nonexistent/x.json"])), 2);
}

#[test]
fn check_against_another_kind() {
    let o = run(&[
        "check",
        &file("mu1_3_delta_1_5.json"),
        "--kind",
        "infinitesimal",
    ]);
    assert_eq!(code(&o), 0);
    let o = run(&[
        "check",
        &file("mu1_3_delta_1_4.json"),
        "--kind",
        "infinitesimal",
    ]);
    assert_eq!(code(&o), 1);
    let o = run(&["check", &file("mu1_3_delta_1_4.json"), "--kind", "hopf"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn construct_k1_reproduces_listed_pair() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k1.json");
    let o = run(&[
        "construct",
        "k1",
        &file("mu1_2.json"),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let built = json(&out);
    let listed = json(&structures().join("mu1_3_delta_1_5.json"));
    for key in ["mult", "comult", "counit", "unit"] {
        assert_eq!(built[key], listed[key], "{key}");
    }
    assert_eq!(code(&run(&["check", out.to_str().unwrap()])), 0);
}

#[test]
fn construct_2b_writes_two_passing_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("pair.json");
    let o = run(&[
        "construct",
        "2b",
        &file("mu1_2.json"),
        &file("mu1_2.json"),
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    for name in ["pair_B1.json", "pair_B2.json"] {
        let p = dir.path().join(name);
        assert!(p.exists(), "{name}");
        assert_eq!(code(&run(&["check", p.to_str().unwrap()])), 0, "{name}");
    }
}

#[test]
fn construct_dimension_mismatch_is_input_error() {
    let o = run(&["construct", "2as", &file("mu1_2.json"), &file("mu1_3.json")]);
    assert_eq!(code(&o), 2);
    let o = run(&["construct", "k1", &file("mu1_2.json"), &file("mu1_2.json")]);
    assert_eq!(code(&o), 2);
}

#[test]
fn census_prints_rows() {
    let o = run(&["census", "3"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    for row in ["mu1_3", "mu2_3", "mu3_3", "mu4_3", "mu5_3"] {
        assert!(s.contains(row), "{row}");
    }
    let o = run(&["--machine-readable", "census", "2"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn catalog_verify_and_show() {
    assert_eq!(code(&run(&["catalog", "verify"])), 0);
    let o = run(&["catalog", "show", "delta_2_3_3", "--lambda", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["catalog", "show", "delta_9_9_9"])), 2);
    assert!(stdout(&run(&["catalog", "list"])).contains("mu5_3"));
}

#[test]
fn shipped_structures_are_current() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&run(&["catalog", "export", dir.path().to_str().unwrap()])),
        0
    );
    let mut n = 0;
    for e in std::fs::read_dir(dir.path()).unwrap() {
        let e = e.unwrap();
        let shipped = structures().join(e.file_name());
        assert_eq!(
            std::fs::read_to_string(e.path()).unwrap(),
            std::fs::read_to_string(&shipped).unwrap(),
            "{}",
            shipped.display()
        );
        n += 1;
    }
    assert_eq!(n, std::fs::read_dir(structures()).unwrap().count());
}

#[test]
fn exported_system_vanishes_on_census_bundle() {
    let sys = run(&["export-system", "2", "2as"]);
    assert_eq!(code(&sys), 0);
    let mut child = bin()
        .args(["export-system", "2", "2as", "--system", "-", "--eval"])
        .arg(file("2as_mu1_2_mu1_2_delta_1_2.json"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&sys.stdout).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn exported_system_detects_failure() {
    let dir = tempfile::tempdir().unwrap();
    let mut v = json(&structures().join("mu1_2_delta_1_2.json"));
    v["comult"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!([1, 2, 2, "1"]));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    for kind in ["2as", "2b"] {
        let o = run(&["export-system", "2", kind, "--eval", bad.to_str().unwrap()]);
        assert_eq!(code(&o), 1, "{kind}");
        assert!(stdout(&o).contains("FAIL"));
    }
    let o = run(&[
        "export-system",
        "2",
        "2b",
        "--eval",
        &file("mu1_3_delta_1_4.json"),
    ]);
    assert_eq!(code(&o), 2);
    let o = run(&[
        "export-system",
        "3",
        "2as",
        "--eval",
        &file("2as_mu1_3_mu2_3_delta_2_1.json"),
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn discover_over_budget_is_input_error() {
    let o = run(&["discover", &file("mu1_3.json"), "--prime", "3"]);
    assert_eq!(code(&o), 2);
    let o = run(&[
        "--budget",
        "10",
        "discover",
        &file("mu1_2.json"),
        "--prime",
        "2",
    ]);
    assert_eq!(code(&o), 2);
    let o = run(&["discover", &file("mu1_2.json"), "--prime", "2"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn isom_finds_dim2_witness() {
    let dir = tempfile::tempdir().unwrap();
    let a = file("mu1_2_delta_1_2.json");
    let b = dir.path().join("same.json");
    std::fs::copy(&a, &b).unwrap();
    assert_eq!(code(&run(&["isom", &a, b.to_str().unwrap()])), 0);
    assert_eq!(
        code(&run(&["isom", &a, b.to_str().unwrap(), "--prime", "3"])),
        0
    );
    assert_ne!(
        code(&run(&[
            "isom",
            &a,
            &file("mu1_2_delta_1_1.json"),
            "--prime",
            "3"
        ])),
        0
    );
}

#[test]
fn machine_readable_output_is_deterministic() {
    for args in [
        &["--machine-readable", "census", "3"][..],
        &[
            "--machine-readable",
            "discover",
            &file("mu1_3.json"),
            "--prime",
            "2",
        ][..],
        &[
            "--machine-readable",
            "check",
            &file("2as_mu3_3_mu5_3_delta_3_1.json"),
        ][..],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}
