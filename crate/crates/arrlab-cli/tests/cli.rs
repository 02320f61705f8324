//! End-to-end tests of the `arrlab` binary: output shapes and the
//! exit-code contract (0 success, 1 input error, 2 violation, 3 negative
//! query).

use std::path::PathBuf;
use std::process::{Command, Output};

fn arrlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write_temp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arrlab-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn catalog_lattice_file(name: &str) -> PathBuf {
    let entry = arrlab_core::catalog::by_name(name).unwrap();
    let json = serde_json::to_string(&entry.expected_lattice).unwrap();
    write_temp(&format!("{}.lattice.json", name.replace(['+', '-'], "_")), &json)
}

fn catalog_arrangement_file(name: &str) -> PathBuf {
    let entry = arrlab_core::catalog::by_name(name).unwrap();
    let json = serde_json::to_string(&entry.arrangement).unwrap();
    write_temp(&format!("{}.arr.json", name.replace(['+', '-'], "_")), &json)
}

#[test]
fn catalog_list_has_eleven_entries() {
    let out = arrlab(&["catalog", "list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("11 entries"));
    let json = arrlab(&["catalog", "list", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 11);
}

#[test]
fn catalog_show_fs_plus() {
    let out = arrlab(&["catalog", "show", "fs+", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["arrangement"]["field_d"], 5);
    assert_eq!(v["arrangement"]["lines"].as_array().unwrap().len(), 9);
}

#[test]
fn catalog_show_unknown_name_exits_one() {
    let out = arrlab(&["catalog", "show", "nosuch"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn incidence_of_fs_reports_profile_and_verdict() {
    let path = catalog_arrangement_file("fs+");
    let out = arrlab(&["incidence", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["profile"]["counts"]["4"], 1);
    assert_eq!(v["profile"]["counts"]["3"], 8);
    assert_eq!(v["profile"]["counts"]["2"], 6);
    assert_eq!(v["hirzebruch"], "pass");
}

#[test]
fn incidence_of_two_lines_has_no_multiples() {
    let path = write_temp(
        "two.json",
        r#"{"field_d":1,"lines":[["1","0","0"],["0","1","0"]]}"#,
    );
    let out = arrlab(&["incidence", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["lattice"]["multiples"].as_array().unwrap().len(), 0);
}

#[test]
fn incidence_rejects_malformed_json() {
    let path = write_temp("bad.json", "{not json");
    let out = arrlab(&["incidence", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn iso_conjugate_maclanes_and_self() {
    let plus = catalog_lattice_file("maclane+");
    let minus = catalog_lattice_file("maclane-");
    let out = arrlab(&["iso", plus.to_str().unwrap(), minus.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let self_out = arrlab(&["iso", plus.to_str().unwrap(), plus.to_str().unwrap()]);
    assert_eq!(stdout(&self_out).trim(), "1 2 3 4 5 6 7 8");
}

#[test]
fn iso_different_sizes_is_negative() {
    let fs = catalog_lattice_file("fs+");
    let ml = catalog_lattice_file("maclane+");
    let out = arrlab(&["iso", fs.to_str().unwrap(), ml.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout(&out).trim(), "none");
}

#[test]
fn iso_accepts_arrangement_files() {
    let arr = catalog_arrangement_file("fs+");
    let lat = catalog_lattice_file("fs-");
    let out = arrlab(&["iso", arr.to_str().unwrap(), lat.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn classify_catalog_lattices() {
    for (name, tag) in [
        ("fs+", "falk_sturmfels"),
        ("a_pm_i+", "a_plus_minus_i"),
        ("nine_three_b", "irreducible_moduli"),
    ] {
        let path = catalog_lattice_file(name);
        let out = arrlab(&["classify", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["tag"], tag, "{name}");
    }
}

#[test]
fn classify_dual_hesse_contains_maclane() {
    let dual_hesse_like = arrlab_core::lattice::IncidenceStructure::new(
        9,
        vec![
            vec![0, 1, 2],
            vec![0, 3, 4],
            vec![0, 5, 6],
            vec![0, 7, 8],
            vec![1, 3, 5],
            vec![1, 4, 7],
            vec![1, 6, 8],
            vec![2, 3, 8],
            vec![2, 4, 6],
            vec![2, 5, 7],
            vec![3, 6, 7],
            vec![4, 5, 8],
        ],
    )
    .unwrap();
    let path = write_temp(
        "dual_hesse.json",
        &serde_json::to_string(&dual_hesse_like).unwrap(),
    );
    // The dual-Hesse lattice (12 triples) contains a MacLane sub-lattice.
    let out = arrlab(&["classify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["tag"], "contains_maclane");
}

#[test]
fn moduli_of_maclane_lattice() {
    let path = catalog_lattice_file("maclane+");
    let out = arrlab(&["moduli", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "points");
    assert_eq!(v["point_count"], 2);
    assert_eq!(v["splitting_field_d"], -3);
}

#[test]
fn moduli_of_nine_three_is_family() {
    let path = catalog_lattice_file("nine_three_a");
    let out = arrlab(&["moduli", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "irreducible_family");
}

#[test]
fn verify_paper_skip_slow_passes_quickly() {
    let out = arrlab(&["verify-paper", "--skip", "slow"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("[SKIP] census_9_3"));
    assert!(text.contains("[PASS] catalog_incidence"));
    assert!(text.contains("0 failed"));
}

#[test]
fn verify_paper_rejects_unknown_skip() {
    let out = arrlab(&["verify-paper", "--skip", "everything"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn arrlab_threads_env_is_validated() {
    let out = Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(["catalog", "list"])
        .env("ARRLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let ok = Command::new(env!("CARGO_BIN_EXE_arrlab"))
        .args(["catalog", "list"])
        .env("ARRLAB_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn tampered_catalog_is_caught_by_the_incidence_check() {
    // Negative control: corrupt one expected lattice and confirm the
    // verify suite's catalog check reports the discrepancy.
    let mut entries = arrlab_core::catalog::all_entries();
    let mut multiples = entries[0].expected_lattice.multiples().to_vec();
    multiples.pop();
    entries[0].expected_lattice =
        arrlab_core::lattice::IncidenceStructure::new(entries[0].expected_lattice.n(), multiples)
            .unwrap();
    let result = arrlab_cli::verify::check_catalog_incidence(&entries);
    let err = result.expect_err("tampered catalog must fail");
    assert!(err.contains("maclane+"), "failure names the entry: {err}");
}
