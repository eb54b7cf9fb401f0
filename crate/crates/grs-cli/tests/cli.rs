//! End-to-end tests of the binary: spec parsing, exit codes, round trips,
//! determinism, and the DOT output shape.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grs"))
}

fn write_spec(dir: &tempfile::TempDir, name: &str, contents: &str) -> std::path::PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn classify_a2_spec() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "a2.json",
        r#"{"rank":2,"cartan":[[2,-1],[-1,2]],"label":"A2"}"#,
    );
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"A_2\""), "{text}");
    assert!(out.stderr.is_empty());
}

#[test]
fn classify_degenerate_is_unsupported() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "all2.json",
        r#"{"rank":3,"cartan":[[2,2,2],[2,2,2],[2,2,2]]}"#,
    );
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("positive definite"), "{err}");
}

#[test]
fn validation_and_parse_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let asym = write_spec(&dir, "asym.json", r#"{"rank":2,"cartan":[[2,-1],[0,2]]}"#);
    let out = run(&["classify", asym.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("not symmetric"));

    let trailing = write_spec(&dir, "trail.json", r#"{"rank":1,"cartan":[[2]]} extra"#);
    let out = run(&["analyze", trailing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let mismatch = write_spec(&dir, "dim.json", r#"{"rank":3,"cartan":[[2]]}"#);
    let out = run(&["analyze", mismatch.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));

    let unknown_field = write_spec(&dir, "extra.json", r#"{"rank":1,"cartan":[[2]],"x":1}"#);
    let out = run(&["analyze", unknown_field.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn realize_classify_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["A_3", "D_4(a_1)", "E_6(a_2)"] {
        let out = run(&["realize", name]);
        assert_eq!(out.status.code(), Some(0));
        let spec = write_spec(&dir, "r.json", &stdout_of(&out));
        let classified = run(&["classify", spec.to_str().unwrap()]);
        assert_eq!(classified.status.code(), Some(0));
        let text = stdout_of(&classified);
        assert!(text.contains(&format!("\"{name}\"")), "{name}: {text}");
    }
}

#[test]
fn classify_reads_standard_input() {
    let mut child = bin()
        .args(["classify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"rank":1,"cartan":[[2]]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"A_1\""));
}

#[test]
fn isomorphic_compares_catalog_names() {
    let dir = tempfile::tempdir().unwrap();
    let d4 = write_spec(&dir, "d4.json", &stdout_of(&run(&["realize", "D_4"])));
    let d4a1 = write_spec(
        &dir,
        "d4a1.json",
        &stdout_of(&run(&["realize", "D_4(a_1)"])),
    );
    let out = run(&["isomorphic", d4.to_str().unwrap(), d4a1.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"isomorphic\": false"));

    let out = run(&["isomorphic", d4.to_str().unwrap(), d4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"isomorphic\": true"));
}

#[test]
fn isomorphic_rejects_reducible_input() {
    let dir = tempfile::tempdir().unwrap();
    let split = write_spec(&dir, "split.json", r#"{"rank":2,"cartan":[[2,0],[0,2]]}"#);
    let out = run(&[
        "isomorphic",
        split.to_str().unwrap(),
        split.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "d5.json", &stdout_of(&run(&["realize", "D_5(a_1)"])));
    let a = run(&["analyze", spec.to_str().unwrap()]);
    let b = run(&["analyze", spec.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["classify", spec.to_str().unwrap()]);
    let b = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn dot_output_shape() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "d4a1.json",
        &stdout_of(&run(&["realize", "D_4(a_1)"])),
    );
    let out = run(&["classify", spec.to_str().unwrap(), "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("graph \"D_4(a_1)\" {"), "{text}");
    assert!(text.contains("node [shape=circle, label=\"\"];"));
    assert_eq!(text.matches(" -- ").count(), 4);

    let catalog_dot = run(&["catalog", "--rank", "1", "--dot"]);
    let text = stdout_of(&catalog_dot);
    assert!(text.contains("graph \"A_1\" {"));
    assert!(text.contains("v0;"));
}

#[test]
fn catalog_listing_by_rank() {
    let out = run(&["catalog", "--rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"A_1\""));
    assert!(!text.contains("\"A_2\""));

    let out = run(&["catalog", "--rank", "4"]);
    let text = stdout_of(&out);
    for name in ["A_4", "D_4", "D_4(a_1)"] {
        assert!(text.contains(&format!("\"{name}\"")), "{text}");
    }
}

#[test]
fn euler_subcommand_reports_identities() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "a2.json", r#"{"rank":2,"cartan":[[2,-1],[-1,2]]}"#);
    let out = run(&["euler", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"symmetrizes_to_cartan\": true"));
    assert!(text.contains("\"coxeter_twist\": true"));
    assert!(text.contains("\"det_one\": true"));
    assert!(text.contains("\"unique_solve\": true"));
}

#[test]
fn roots_subcommand_counts() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(&dir, "a2.json", r#"{"rank":2,"cartan":[[2,-1],[-1,2]]}"#);
    let out = run(&["roots", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("\"count\": 6"));
}

#[test]
fn classify_reports_each_component_of_a_reducible_system() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "mixed.json",
        r#"{"rank":3,"cartan":[[2,0,0],[0,2,-1],[0,-1,2]]}"#,
    );
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"A_1\""), "{text}");
    assert!(text.contains("\"A_2\""), "{text}");
}

#[test]
fn cap_flag_overrides_enumeration_caps_and_is_echoed() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "a3.json",
        r#"{"rank":3,"cartan":[[2,-1,0],[-1,2,-1],[0,-1,2]]}"#,
    );
    // Coxeter order of this presentation is 4, beyond a cap of 2.
    let out = run(&["analyze", spec.to_str().unwrap(), "--cap", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"unknown_at_cap\": 2"), "{text}");
    assert!(text.contains("\"weyl_group\": 2"));

    let out = run(&["analyze", spec.to_str().unwrap()]);
    let text = stdout_of(&out);
    assert!(text.contains("\"coxeter_order\": 4"), "{text}");
    assert!(text.contains("\"weyl_group\": 1000000"));
}

#[test]
fn analyze_degenerate_system_marks_inapplicable_fields() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(
        &dir,
        "all2.json",
        r#"{"rank":3,"cartan":[[2,2,2],[2,2,2],[2,2,2]]}"#,
    );
    let out = run(&["analyze", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_of(&out);
    assert!(text.contains("\"positive_definite\": false"));
    assert!(text.contains("\"radical_rank\": 2"));
    assert!(text.contains("\"coxeter_order\": 2"));
    assert!(text.contains("inapplicable"));
    assert!(text.contains("\"heuristic\": true"));
}
