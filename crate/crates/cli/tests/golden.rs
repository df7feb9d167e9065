//! JSON output of every command, compared against checked-in files.
//! Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

const QPLANE: &str = "field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h";
const WEYL4: &str = "field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^2-1";
const MINUS: &str = "field=Q algebra d=poly q=-1 a=h^2+h";
const SYM: &str = "field=Q(zeta(3)) algebra d=laurent q=zeta(3) a=h+2+hinv";

fn qgwa(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qgwa"))
        .args(args)
        .env_remove("QGWA_FIELD")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn golden(name: &str, expected_code: i32, args: &[&str]) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, stdout) = qgwa(&full);
    assert_eq!(
        code, expected_code,
        "{name}: exit status, output:\n{stdout}"
    );
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(
        stdout,
        want,
        "{name}: output differs from {}",
        path.display()
    );
    serde_json::from_str::<serde_json::Value>(&stdout).expect("valid JSON");
}

#[test]
fn nf() {
    golden("nf", 0, &["nf", "--spec", WEYL4, "x*y"]);
}

#[test]
fn mul() {
    golden("mul", 0, &["mul", "--spec", WEYL4, "y + h", "x", "2*h"]);
}

#[test]
fn iso_yes() {
    golden(
        "iso_yes",
        0,
        &[
            "iso",
            QPLANE,
            "field=Q(zeta(4)) algebra d=poly q=-zeta(4) a=h",
        ],
    );
}

#[test]
fn iso_no() {
    golden("iso_no", 1, &["iso", WEYL4, QPLANE]);
}

#[test]
fn aut_quantum_plane() {
    golden("aut", 0, &["aut", QPLANE]);
}

#[test]
fn aut_unit_case() {
    golden(
        "aut_unit",
        0,
        &["aut", "field=Q(zeta(4)) algebra d=laurent q=-1 a=h^2"],
    );
}

#[test]
fn check_hom() {
    golden(
        "check_hom",
        0,
        &["check-hom", "--source", MINUS, "--images", "x", "-h", "y"],
    );
    golden(
        "check_hom_fail",
        1,
        &["check-hom", "--source", MINUS, "--images", "x", "h", "y"],
    );
}

#[test]
fn aut_gen() {
    golden(
        "aut_gen_eta",
        0,
        &[
            "aut-gen", "eta", "--spec", WEYL4, "--gamma", "-1", "--mu", "1/2",
        ],
    );
    golden(
        "aut_gen_omega_sym",
        0,
        &["aut-gen", "omega-sym", "--spec", SYM],
    );
    golden(
        "aut_gen_omega_absent",
        1,
        &["aut-gen", "omega", "--spec", WEYL4],
    );
    golden(
        "aut_gen_unit_matrix",
        0,
        &[
            "aut-gen",
            "unit-matrix",
            "--spec",
            "field=Q(zeta(4)) algebra d=poly q=zeta(4) a=1",
            "--matrix",
            "1,2,0,1",
            "--s",
            "3",
        ],
    );
}

#[test]
fn derive() {
    golden(
        "derive",
        0,
        &["derive", "--spec", WEYL4, "--images", "y", "0", "-x"],
    );
    golden(
        "derive_inconsistent",
        1,
        &["derive", "--spec", WEYL4, "--images", "0", "h", "0"],
    );
}

#[test]
fn derivation_space() {
    golden(
        "derivation_space",
        0,
        &[
            "derivation-space",
            "--spec",
            WEYL4,
            "--weight",
            "1",
            "--deg-bound",
            "2",
        ],
    );
    golden(
        "locally_finite",
        0,
        &[
            "derivation-space",
            "--spec",
            "field=Q(zeta(4)) algebra d=poly q=zeta(4) a=h^3",
            "--locally-finite",
        ],
    );
}

#[test]
fn symmetric() {
    golden("symmetric", 0, &["symmetric", SYM]);
    golden(
        "symmetric_no",
        1,
        &[
            "symmetric",
            "field=Q(zeta(3)) algebra d=laurent q=zeta(3) a=h^3+h+1",
        ],
    );
}

#[test]
fn lambda() {
    golden("lambda", 0, &["lambda", "--N", "4"]);
}

#[test]
fn cross_check() {
    golden(
        "cross_check_aut",
        0,
        &["cross-check-aut", MINUS, "--grid-size", "4"],
    );
}

#[test]
fn errors_exit_two() {
    let (code, out) = qgwa(&[
        "--json",
        "nf",
        "--spec",
        "field=Q algebra d=poly q=1 a=h",
        "x",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("column 26"), "{out}");
    let (code, _) = qgwa(&["nf", "--spec", "field=Q algebra d=poly q=-1 a=h^-1", "x"]);
    assert_eq!(code, 2);
    let (code, _) = qgwa(&["nf", "--spec", WEYL4, "x*"]);
    assert_eq!(code, 2);
    let (code, _) = qgwa(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn spec_file_and_default_field() {
    let dir = std::env::temp_dir().join(format!("qgwa-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("a.spec");
    std::fs::write(&f, "algebra d=poly\n  q=zeta(4)\n  a=h^2-1\n").unwrap();
    let (code, out) = qgwa(&["--spec-file", f.to_str().unwrap(), "nf", "x*y"]);
    assert_eq!((code, out.as_str()), (0, "-h^2 - 1\n"));

    let out = Command::new(env!("CARGO_BIN_EXE_qgwa"))
        .args(["nf", "--spec", "algebra d=poly q=-1 a=h", "y*x - zeta(3)"])
        .env("QGWA_FIELD", "Q(zeta(3))")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "h - zeta(3)\n");
    std::fs::remove_dir_all(dir).unwrap();
}
