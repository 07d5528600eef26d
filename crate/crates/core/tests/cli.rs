use std::path::PathBuf;
use std::process::{Command, Output};

use gvcat::cli::{self, manifest, Command as Cmd, Options};
use gvcat::Error;

fn gvcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gvcat")).args(args).output().expect("run gvcat")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gvcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn parse_error(src: &str) -> (usize, usize, String) {
    match manifest::parse(src) {
        Err(Error::Parse { line, col, msg }) => (line, col, msg),
        other => panic!("expected a parse error, got {other:?}"),
    }
}

const DUAL_BY_CONSTANTS: &str = "\
[field]
prime 5
[algebra]
dim 2
unit 1 0
0 0 0 1
0 1 1 1
1 0 1 1
[object k]
left 0 = 1
left 1 = 0
right 0 = 1
right 1 = 0
";

#[test]
fn parse_errors_carry_positions() {
    assert_eq!(parse_error("[field]\nprime x\n").0, 2);
    assert_eq!(parse_error("[field]\nprime x\n").1, 7);
    let (line, col, _) = parse_error("[field]\nprime 5\n[bogus]\n");
    assert_eq!((line, col), (3, 1));
    let (line, col, msg) = parse_error("[field]\nprime 5\n[group]\ncyclic 2\n[object m]\nact 1 = 1 0; 0\n");
    assert_eq!((line, col), (6, 14));
    assert!(msg.contains("2 entries"), "{msg}");
    let (line, _, _) = parse_error("prime 5\n");
    assert_eq!(line, 1);
    let (line, col, _) = parse_error("[field]\nprime 5\n[algebra]\npoly 0 0 1\n[group]\ncyclic 2\n");
    assert_eq!((line, col), (5, 1));
}

#[test]
fn bad_entries_are_located_after_the_field_is_known() {
    let src = "[field]\nprime 5\n[group]\ncyclic 2\n[object s]\nact 1 = 1/0\n";
    match cli::run_manifest(src, "m", Cmd::Check, &Options::default()) {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (6, 9)),
        other => panic!("{other:?}"),
    }
    let src = "[field]\nprime 5\n[algebra]\ndim 2\nunit 1 0\n0 0 7 1\n";
    match cli::run_manifest(src, "m", Cmd::Check, &Options::default()) {
        Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (6, 5)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn structure_constants_reproduce_the_polynomial_algebra() {
    let poly = DUAL_BY_CONSTANTS.replace("dim 2\nunit 1 0\n0 0 0 1\n0 1 1 1\n1 0 1 1\n", "poly 0 0 1\n");
    let opts = Options::default();
    let a = cli::run_manifest(DUAL_BY_CONSTANTS, "m", Cmd::Check, &opts).unwrap();
    let b = cli::run_manifest(&poly, "m", Cmd::Check, &opts).unwrap();
    assert!(a.passed);
    assert_eq!(a, b);
}

#[test]
fn invalid_algebra_exits_with_check_failure() {
    // e1·e0 = e0 instead of e1: the unit fails on the right
    let broken = DUAL_BY_CONSTANTS.replace("1 0 1 1", "1 0 0 1");
    let path = temp_file("broken.gv", &broken);
    let out = gvcat(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid algebra"));
}

#[test]
fn group_algebra_catalog_passes_every_suite() {
    let out = gvcat(&["run", "--catalog", "f5-c2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("AXIOM A10 "));
    assert!(text.contains("FORMS A total=25"));
    assert!(!text.contains(" FAIL"));
}

#[test]
fn indicator_table_for_quaternions() {
    let out = gvcat(&["indicators", "--catalog", "q8-f5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("object n r nu\n"));
    assert!(text.lines().any(|l| l == "H 2 1 4"), "{text}");
}

#[test]
fn usage_errors_exit_with_one() {
    assert_eq!(gvcat(&["check"]).status.code(), Some(1));
    assert_eq!(gvcat(&["check", "--catalog", "nope"]).status.code(), Some(1));
    assert_eq!(gvcat(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gvcat(&["check", "/nonexistent/manifest.gv"]).status.code(), Some(1));
    let path = temp_file("syntax.gv", "[field]\nprime five\n");
    let out = gvcat(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 7"));
    assert_eq!(gvcat(&["--help"]).status.code(), Some(0));
}

#[test]
fn report_file_matches_stdout() {
    let path = std::env::temp_dir().join(format!("gvcat-report-{}.txt", std::process::id()));
    let out = gvcat(&["check", "--catalog", "c3-f7", "--seed", "3", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), out.stdout);
    std::fs::remove_file(path).ok();
}

#[test]
fn max_dim_trims_the_catalog() {
    let opts = Options { seed: 0, max_dim: 1 };
    let src = gvcat::cli::catalog::source("c2-f5").unwrap();
    let out = cli::run_manifest(src, "c2-f5", Cmd::Indicators, &opts).unwrap();
    assert!(!out.text.contains("reg "));
    assert!(out.text.contains("s 1 1 0"));
}

#[test]
fn every_catalog_parses_with_a_run_list() {
    for name in gvcat::cli::catalog::names() {
        let m = manifest::parse(gvcat::cli::catalog::source(name).unwrap()).unwrap();
        assert!(!m.run.is_empty(), "{name}");
    }
}
