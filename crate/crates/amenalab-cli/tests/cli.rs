//! End-to-end runs of the binary: pinned examples, exit codes, config
//! merging and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_amenalab"))
        .args(args)
        .env_remove("AMENALAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn folner_sweep_emits_the_exact_boundary_ratio() {
    let output = run(&[
        "folner-sweep",
        "--family",
        "bicyclic",
        "--element",
        "q",
        "--n",
        "10..100",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,window_size,symdiff,ratio,ratio_decimal")
    );
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let n: u64 = fields[0].parse().unwrap();
        assert_eq!(fields[1], (n * n).to_string(), "window is the n x n box");
        assert_eq!(fields[2], (2 * n).to_string(), "boundary has 2n elements");
        let g = gcd(2, n);
        assert_eq!(fields[3], format!("{}/{}", 2 / g, n / g), "ratio is 2/n");
        rows += 1;
    }
    assert_eq!(rows, 91);
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn paradox_cert_fs2_forces_the_inequality() {
    let output = run(&["paradox-cert", "--builtin", "fs2", "--radius", "10"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).trim_end().ends_with("1 ≥ 2"));
}

#[test]
fn paradox_cert_rejects_the_bicyclic_attempt() {
    let output = run(&["paradox-cert", "--builtin", "bicyclic", "--radius", "4"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("rejected"));
}

#[test]
fn fair_check_passes_any_weights_on_the_constant_side() {
    let output = run(&[
        "fair-check",
        "--table",
        &fixture("left-zero-2.tbl"),
        "--weights",
        &fixture("w.txt"),
        "--side",
        "right",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("pass"));
}

#[test]
fn fair_check_reports_a_witness_on_the_moving_side() {
    let output = run(&[
        "fair-check",
        "--table",
        &fixture("left-zero-2.tbl"),
        "--weights",
        &fixture("w.txt"),
        "--side",
        "left",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("FAIL"));
    assert!(text.contains("witness"));
}

#[test]
fn unknown_family_is_a_parse_error() {
    let output = run(&["mul", "--family", "nosuch", "--a", "1", "--b", "2"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn convolve_matches_the_hand_product() {
    let output = run(&[
        "convolve",
        "--family",
        "bicyclic",
        "--f",
        &fixture("f.txt"),
        "--g",
        &fixture("g.txt"),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "p^2 1/1\nqp 1/1\n");
}

#[test]
fn config_defaults_match_explicit_flags_byte_for_byte() {
    let from_config = run(&["folner-sweep", "--config", &fixture("sweep.conf")]);
    let from_flags = run(&[
        "folner-sweep",
        "--family",
        "bicyclic",
        "--element",
        "q",
        "--n",
        "10..20",
    ]);
    assert_eq!(from_config.status.code(), Some(0));
    assert_eq!(from_config.stdout, from_flags.stdout);
}

#[test]
fn flags_override_config_values() {
    let output = run(&[
        "folner-sweep",
        "--config",
        &fixture("sweep.conf"),
        "--n",
        "5..5",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().nth(1).unwrap().starts_with("5,25,10,2/5,"));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["table1", "--seed", "7"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn seed_env_var_is_the_fallback() {
    let via_env = Command::new(env!("CARGO_BIN_EXE_amenalab"))
        .args(["table1"])
        .env("AMENALAB_SEED", "9")
        .output()
        .expect("binary runs");
    let via_flag = run(&["table1", "--seed", "9"]);
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(via_env.stdout, via_flag.stdout);
    assert!(stdout(&via_flag).contains("seed 9"));
}

#[test]
fn fibers_reports_the_known_two_point_fiber() {
    let output = run(&[
        "fibers",
        "--family",
        "bicyclic",
        "--element",
        "p",
        "--set",
        "all",
        "--n",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("max fiber: 2"));
}

#[test]
fn injective_finds_the_bicyclic_collision() {
    let output = run(&[
        "injective",
        "--family",
        "bicyclic",
        "--element",
        "p",
        "--set",
        "all",
        "--n",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("collision"));

    let clean = run(&[
        "injective",
        "--family",
        "bicyclic",
        "--element",
        "q",
        "--set",
        "all",
        "--n",
        "6",
    ]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn green_relates_bicyclic_elements_on_finite_tables_only() {
    let output = run(&["green", "--family", "sym3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("L: "));
    assert!(text.contains("D: "));

    let infinite = run(&["green", "--family", "bicyclic"]);
    assert_eq!(infinite.status.code(), Some(2));
}

#[test]
fn fair_solve_lists_the_sided_classes() {
    let output = run(&[
        "fair-solve",
        "--family",
        "leftzero(3)",
        "--side",
        "right",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("dimension: 3"));

    let left = run(&["fair-solve", "--family", "leftzero(3)", "--side", "left"]);
    assert!(stdout(&left).contains("dimension: 1"));
}

#[test]
fn transfer_involution_flips_the_passing_side() {
    let dir = std::env::temp_dir().join("amenalab-cli-transfer");
    std::fs::create_dir_all(&dir).unwrap();
    let weights = dir.join("band.txt");
    std::fs::write(&weights, "0 1/6\n1 1/3\n2 1/6\n3 1/3\n").unwrap();
    let output = run(&[
        "transfer",
        "--family",
        "product(leftzero(2), rightzero(2))",
        "--weights",
        weights.to_str().unwrap(),
        "--side",
        "left",
        "--mode",
        "involution",
    ]);
    assert_eq!(output.status.code(), Some(2), "band has no involution");

    let sym = run(&[
        "transfer",
        "--family",
        "sym3",
        "--weights",
        &fixture_uniform_sym3(&dir),
        "--side",
        "left",
        "--mode",
        "involution",
    ]);
    assert_eq!(sym.status.code(), Some(0));
    assert!(stdout(&sym).contains("left side -> right side"));
}

fn fixture_uniform_sym3(dir: &std::path::Path) -> String {
    let path = dir.join("sym3-uniform.txt");
    let lines: String = (0..6).map(|i| format!("{i} 1/6\n")).collect();
    std::fs::write(&path, lines).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn ast_check_agrees_with_fairness_on_a_dirac() {
    let dir = std::env::temp_dir().join("amenalab-cli-ast");
    std::fs::create_dir_all(&dir).unwrap();
    let weights = dir.join("w.txt");
    std::fs::write(&weights, "0 1/3\n1 1/3\n2 1/3\n").unwrap();
    let f = dir.join("f.txt");
    std::fs::write(&f, "1 1/1\n").unwrap();
    let output = run(&[
        "ast-check",
        "--family",
        "cyclic(3)",
        "--weights",
        weights.to_str().unwrap(),
        "--f",
        f.to_str().unwrap(),
        "--element",
        "2",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("invariant: yes"));
    assert!(text.contains("weights fair (left): yes"));
}

#[test]
fn partial_action_indicator_reports_the_flattening_trend() {
    let output = run(&[
        "partial-action",
        "--family",
        "zero(commvec(1))",
        "--element",
        "0",
        "--set",
        "all",
        "--n",
        "8",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("unbounded-trend"));
}

#[test]
fn measure_series_tracks_a_thinning_column() {
    let output = run(&[
        "measure-series",
        "--family",
        "bicyclic",
        "--set",
        "column:0",
        "--n",
        "10,100",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.lines().nth(1).unwrap().starts_with("10,10,100,1/10,"));
    assert!(text.lines().nth(2).unwrap().starts_with("100,100,10000,1/100,"));
}
