//! End-to-end runs of the `typeb` binary: output formats and exit codes.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use typeb_cli::{OutputTable, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

fn typeb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typeb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn temp_fixture(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn csv_sequence_row() {
    let out = typeb(&["table", "cauchy1_B", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    assert_eq!(
        stdout(&out),
        "1,-1/2,4/3,-25/4,628/15,-729/2,81994/21,-1191619/24\n"
    );
}

#[test]
fn json_round_trip_matches_triangle() {
    let out = typeb(&["table", "lah_B", "--n", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    let table = OutputTable::from_json(&stdout(&out)).unwrap();
    assert_eq!(table, typeb_cli::cmd_table("lah_B".parse().unwrap(), 7));
    assert_eq!(table.family, "lah_B");
    assert_eq!(table.n_max, 7);
    assert_eq!(table.rows[7][2], "1693440");
    assert_eq!(table.rows[7][3], "470400");
}

#[test]
fn markdown_single_row() {
    let out = typeb(&["table", "stirling2_B", "--n", "0"]);
    let text = stdout(&out);
    let body: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(body, ["| 0 | 1 |"]);
}

#[test]
fn verify_passes_with_zero_status() {
    let out = typeb(&["verify", "harmonic_identity", "--n", "40"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    assert!(stdout(&out).starts_with("PASS harmonic_identity"));
}

#[test]
fn oeis_fixtures_pass() {
    for (seq, file) in [("A039755", "b039755.txt"), ("A039758", "b039758.txt")] {
        let path = fixture(file);
        let out = typeb(&["oeis-check", seq, "--fixture", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(EXIT_PASS), "{seq}");
    }
}

#[test]
fn vendored_fixtures_contain_known_entries() {
    let s2 =
        typeb_cli::parse_bfile(&std::fs::read_to_string(fixture("b039755.txt")).unwrap()).unwrap();
    assert_eq!(s2[7].1, 13.into());
    let c1 =
        typeb_cli::parse_bfile(&std::fs::read_to_string(fixture("b039758.txt")).unwrap()).unwrap();
    assert_eq!(c1[11].1, 176.into());
}

#[test]
fn wrong_fixture_value_is_a_verification_failure() {
    let f = temp_fixture("0 1\n1 1\n2 1\n3 1\n4 5\n");
    let out = typeb(&[
        "oeis-check",
        "A039755",
        "--fixture",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(EXIT_FAIL));
    let text = stdout(&out);
    assert!(text.starts_with("FAIL A039755"), "{text}");
    assert!(text.contains("n = 4"), "{text}");
}

#[test]
fn empty_fixture_is_malformed() {
    let f = temp_fixture("# nothing here\n");
    let out = typeb(&[
        "oeis-check",
        "A039755",
        "--fixture",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed"));
}

#[test]
fn missing_fixture_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("absent.txt");
    let out = typeb(&["oeis-check", "A039758", "--fixture", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["verify", "no_such_identity"][..],
        &["table", "no_such_family"],
        &["table", "lah_B", "--format", "xml"],
        &["egf", "cauchy3_B"],
        &["oeis-check", "A000045", "--fixture", "x"],
        &["frobnicate"],
        &[],
    ] {
        assert_eq!(typeb(args).status.code(), Some(EXIT_USAGE), "{args:?}");
    }
}

#[test]
fn egf_prints_coefficients_and_scaled_values() {
    let out = typeb(&["egf", "cauchy2_B", "--order", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_PASS));
    assert_eq!(
        stdout(&out),
        "n,coefficient,scaled\n0,1,1\n1,3/2,3/2\n2,8/3,16/3\n3,119/24,119/4\n"
    );
    let out = typeb(&["egf", "lah_bell_B", "--order", "3"]);
    let scaled: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(scaled, ["1", "3", "17", "139"]);
}

#[test]
fn egf_order_follows_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_typeb"))
        .args(["egf", "cauchy1_A"])
        .env("TYPEB_SERIES_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(
        stdout(&out),
        "n,coefficient,scaled\n0,1,1\n1,1/2,1/2\n2,-1/12,-1/6\n"
    );
}
