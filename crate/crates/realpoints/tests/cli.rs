//! End-to-end tests of the `realpoints` binary: subcommands, exit codes,
//! determinism, and the offline re-verification loop.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_realpoints")
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().expect("binary runs")
}

#[test]
fn bound_subcommand_prints_the_numbers() {
    let out = run(&["bound", "--degrees", "2", "--n", "2", "--s", "1", "--regular"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("critical-bound: 2"), "{}", text);
    assert!(text.contains("betti-bound: 4"), "{}", text);
    assert!(text.contains("thom-milnor-bound: 6"), "{}", text);
}

#[test]
fn sample_circle_exit_zero_and_points() {
    let out = run(&[
        "sample",
        fixture("circle.sys").to_str().unwrap(),
        "--regular",
        "--seed",
        "7",
        "--width",
        "1/4096",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("on-variety: true"));
    assert!(!text.contains("on-variety: false"));
    let total: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("total-points: "))
        .unwrap()
        .parse()
        .unwrap();
    assert!(total >= 1);
}

#[test]
fn same_seed_is_byte_identical_different_seed_is_not_required_to_be() {
    let path = fixture("circle.sys");
    let args = [
        "sample",
        path.to_str().unwrap(),
        "--regular",
        "--seed",
        "9",
        "--width",
        "1/4096",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout, "same seed must be byte-identical");
}

#[test]
fn missing_file_exits_one() {
    let out = run(&["sample", "/definitely/not/here.sys"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_width_exits_one() {
    let out = run(&[
        "sample",
        fixture("circle.sys").to_str().unwrap(),
        "--width",
        "zero",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn nonradical_input_exits_two() {
    let out = run(&[
        "sample",
        fixture("nonradical.sys").to_str().unwrap(),
        "--width",
        "1/1024",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hypothesis violation"), "{}", err);
}

#[test]
fn out_file_round_trips_through_reverification() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("report.txt");
    let out = run(&[
        "sample",
        fixture("two_circles.sys").to_str().unwrap(),
        "--regular",
        "--seed",
        "4",
        "--width",
        "1/4096",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(text.as_bytes(), out.stdout.as_slice());
    let parsed = realpoints::report::parse_sample_report(&text).unwrap();
    assert_eq!(parsed.total_points, parsed.points.len());
    assert!(parsed.total_points >= 2);
    for cube in &parsed.points {
        for g in &parsed.input_polys {
            assert!(realpoints::interval::eval_poly_box(g, cube).contains_zero());
        }
    }
}

#[test]
fn bidegree_subcommand_agrees() {
    let out = run(&["bidegree", fixture("bilinear.sys").to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("agree"), "{}", text);
    assert!(!text.contains("DISAGREE"), "{}", text);
    assert!(text.contains("strong-bidegree: 2"), "{}", text);
}

#[test]
fn biseries_subcommand_prints_table() {
    let out = run(&["biseries", fixture("bilinear.sys").to_str().unwrap(), "--n", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("row[0]: 1"), "{}", text);
    assert!(text.contains("C[")); // canonical coefficients listed
}

#[test]
fn lagrange_subcommand_is_reparseable() {
    let out = run(&["lagrange", fixture("circle.sys").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let sys = realpoints::sysfile::parse_system(&text).unwrap();
    assert_eq!(sys.polys.len(), 3);
    assert_eq!(sys.ring.nvars(), 3);
}

#[test]
fn parallel_flag_gives_same_points() {
    let path = fixture("sphere.sys");
    let base = [
        "sample",
        path.to_str().unwrap(),
        "--regular",
        "--seed",
        "5",
        "--width",
        "1/1024",
    ];
    let serial = run(&base);
    let mut with_parallel: Vec<&str> = base.to_vec();
    with_parallel.push("--parallel");
    let parallel = run(&with_parallel);
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn cross_check_flag_reports_agreement() {
    let path = fixture("circle.sys");
    let mut args = vec![
        "sample",
        path.to_str().unwrap(),
        "--regular",
        "--seed",
        "6",
        "--width",
        "1/1024",
        "--cross-check",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cross-check: agreed"), "{}", text);
    args.pop();
    let without = run(&args);
    let text2 = String::from_utf8(without.stdout).unwrap();
    assert!(!text2.contains("cross-check:"));
}
