//! End-to-end tests of the command-line interface: output formats, exit
//! codes, and byte-level determinism under fixed seeds.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_culminating"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn count_csv_matches_small_table() {
    let out = run(&[
        "count", "--a", "1", "--b", "1", "--n", "6", "--format", "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,count\n1,1\n2,1\n3,1\n4,1\n5,2\n6,3\n");
}

#[test]
fn count_positive_csv() {
    let out = run(&[
        "count",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "6",
        "--positive",
        "--format",
        "csv",
    ]);
    assert_eq!(stdout(&out), "n,count\n1,1\n2,1\n3,2\n4,3\n5,6\n6,10\n");
}

#[test]
fn count_fixed_height_all_zero_when_impossible() {
    let out = run(&[
        "count", "--a", "5", "--b", "3", "--n", "10", "--k", "6", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",0"), "unexpected count in {line}");
    }
}

#[test]
fn count_rejects_noncoprime_with_usage_exit() {
    let out = run(&["count", "--a", "2", "--b", "4", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gf_prints_denominator_and_numerator() {
    let out = run(&["gf", "--a", "1", "--b", "1", "--k", "4"]);
    let text = stdout(&out);
    assert!(text.contains("D_4 = 1 - 2*t^2"), "{text}");
    assert!(text.contains("t^2*N_4 = t^4"), "{text}");

    let out = run(&["gf", "--a", "2", "--b", "1", "--k", "3", "--n", "8"]);
    let text = stdout(&out);
    assert!(text.contains("t^2*N_3 = t^3"), "{text}");

    let out = run(&["gf", "--a", "1", "--b", "2", "--k", "5"]);
    let text = stdout(&out);
    assert!(text.contains("D_5 = 1 - 2*t^3"), "{text}");

    let out = run(&["gf", "--a", "5", "--b", "3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_is_byte_identical_across_runs_and_matches_golden() {
    let args = [
        "sample",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "8",
        "--method",
        "recursive",
        "--samples",
        "4",
        "--seed",
        "7",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(
        first.stdout, second.stdout,
        "two runs with identical flags diverged"
    );
    let golden = include_str!("golden/sample_recursive_seed7.ndjson");
    assert_eq!(stdout(&first), golden);
}

#[test]
fn sample_worker_count_does_not_change_output() {
    let base = [
        "sample",
        "--a",
        "2",
        "--b",
        "1",
        "--n",
        "30",
        "--method",
        "hybrid",
        "--samples",
        "6",
        "--seed",
        "11",
    ];
    let serial = run(&[&base[..], &["--workers", "1"]].concat());
    let parallel = run(&[&base[..], &["--workers", "3"]].concat());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn sample_seed_env_var_is_the_default() {
    let args = [
        "sample",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "8",
        "--method",
        "recursive",
    ];
    let via_env = bin().args(args).env("CULM_SEED", "7").output().unwrap();
    let via_flag = run(&[&args[..], &["--seed", "7"]].concat());
    assert_eq!(via_env.stdout, via_flag.stdout);
}

#[test]
fn sample_record_shape() {
    let out = run(&[
        "sample",
        "--a",
        "5",
        "--b",
        "3",
        "--n",
        "9",
        "--method",
        "fixed-height",
        "--k",
        "13",
        "--seed",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(value["a"], 5);
    assert_eq!(value["b"], 3);
    assert_eq!(value["k"], 13);
    assert_eq!(value["method"], "fixed-height");
    assert_eq!(value["final_height"], 13);
    assert_eq!(value["word"].as_str().unwrap().len(), 9);
    assert!(text.starts_with("{\"a\":5,\"b\":3,\"n\":9,\"k\":13,\"method\":"));
}

#[test]
fn sample_empty_class_exits_3() {
    let out = run(&[
        "sample",
        "--a",
        "5",
        "--b",
        "3",
        "--n",
        "10",
        "--method",
        "fixed-height",
        "--k",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn sample_give_up_exits_4() {
    // Strongly negative drift: the default step cap trips long before a
    // positive walk of this length appears.
    let out = run(&[
        "sample",
        "--a",
        "1",
        "--b",
        "3",
        "--n",
        "200",
        "--method",
        "anticipated",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn sample_fixed_height_requires_k() {
    let out = run(&[
        "sample",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "5",
        "--method",
        "fixed-height",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_boltzmann_sizes_stay_in_window() {
    let out = run(&[
        "sample",
        "--a",
        "1",
        "--b",
        "1",
        "--n",
        "30",
        "--method",
        "boltzmann",
        "--epsilon",
        "0.2",
        "--samples",
        "5",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    for line in stdout(&out).lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        let len = value["word"].as_str().unwrap().len();
        assert!((24..=36).contains(&len), "size {len} outside window");
    }
}

#[test]
fn bench_emits_frozen_csv_columns_deterministically() {
    let args = [
        "bench", "--a", "1", "--b", "1", "--n", "40,80", "--method", "hybrid", "--trials", "8",
        "--seed", "3",
    ];
    let first = run(&args);
    assert!(first.status.success());
    let text = stdout(&first);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "method,a,b,n,trials,mean_attempts,mean_steps,stddev"
    );
    assert_eq!(lines.clone().count(), 2);
    for line in lines {
        assert!(line.starts_with("hybrid,1,1,"), "{line}");
    }
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_quick_passes() {
    let out = run(&["verify", "--quick"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("PASS 1"), "{text}");
    assert!(text.contains("(quick mode)"));
}
