//! Behavior of the binary: exit codes, output shapes, determinism, and
//! error reporting. Small dimensions keep these fast; statistical quality
//! is covered elsewhere.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn seqhv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqhv")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn synthetic_data() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../seqhv/data/synthetic_priming.csv")
        .to_str()
        .unwrap()
        .to_string()
}

const SMALL: &[&str] = &["--dim", "1024", "--realizations", "6"];

#[test]
fn help_covers_every_subcommand() {
    let out = seqhv(&["--help"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for sub in ["sim", "bench-constraints", "bench-priming", "sweep", "encode"] {
        assert!(text.contains(sub), "missing {sub} in help");
    }
}

#[test]
fn unknown_flags_are_rejected() {
    let out = seqhv(&["sim", "ab", "abc", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sim_prints_mean_and_baselines() {
    let mut args = vec!["sim", "1245", "12345"];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("mean"));
    assert!(text.contains("seed 42"));
    assert!(text.contains("lev-sum"));
    assert!(text.contains("wildcard3"));
}

#[test]
fn sim_rejects_empty_strings() {
    let out = seqhv(&["sim", "", "abc"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nonempty"));
}

#[test]
fn sim_output_is_deterministic_and_env_seedable() {
    let mut args = vec!["sim", "ab", "ba"];
    args.extend_from_slice(SMALL);
    let a = seqhv(&args);
    let b = seqhv(&args);
    assert_eq!(a.stdout, b.stdout);

    let mut flagged = args.clone();
    flagged.extend_from_slice(&["--seed", "7"]);
    let via_flag = seqhv(&flagged);
    let via_env = Command::new(env!("CARGO_BIN_EXE_seqhv"))
        .args(&args)
        .env("SEQHV_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(via_flag.stdout, via_env.stdout);
    assert_ne!(via_flag.stdout, a.stdout);
}

#[test]
fn constraints_fail_with_exit_one_at_radius_one() {
    let mut args = vec!["bench-constraints", "--radius", "1", "--shift", "0"];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("satisfied"));
    assert!(!text.contains("satisfied 20/20"));
}

#[test]
fn constraints_write_csv_or_json_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let csv_path = dir.path().join("report.csv");
    for path in [&json_path, &csv_path] {
        let mut args = vec!["bench-constraints", "--db", "--output", path.to_str().unwrap()];
        args.extend_from_slice(SMALL);
        seqhv(&args);
    }
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(v["config"]["dim"], 1024);
    assert_eq!(v["conditions"].as_array().unwrap().len(), 20);
    let csv = fs::read_to_string(&csv_path).unwrap();
    assert!(csv.starts_with("id,prime,target,criteria,mean,std,satisfied\n"));
    assert_eq!(csv.lines().count(), 21);
}

#[test]
fn unwritable_output_exits_two() {
    let mut args = vec![
        "bench-constraints",
        "--output",
        "/nonexistent-dir/report.json",
    ];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/nonexistent-dir/report.json"));
}

#[test]
fn priming_reports_correlation_and_baselines() {
    let data = synthetic_data();
    let mut args = vec!["bench-priming", "--data", &data, "--baselines"];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("pearson"));
    assert!(text.contains("20 pairs"));
    assert!(text.contains("lev-max"));
}

#[test]
fn priming_scatter_lands_in_the_csv_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scatter.csv");
    let data = synthetic_data();
    let mut args = vec!["bench-priming", "--data", &data, "--output", path.to_str().unwrap()];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert!(out.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("prime,target,priming_ms,mean_similarity\n"));
    assert_eq!(csv.lines().count(), 21);
}

#[test]
fn malformed_priming_rows_report_their_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    fs::write(&path, "prime,target,priming_ms\nsown,snow,41.5\nsonw,snow,fast\n").unwrap();
    let out = seqhv(&["bench-priming", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn missing_priming_file_exits_two() {
    let out = seqhv(&["bench-priming", "--data", "/no/such/file.csv"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/no/such/file.csv"));
}

#[test]
fn profile_sweep_emits_one_row_per_offset() {
    let mut args = vec![
        "sweep", "--mode", "profile", "--string", "xyx", "--from", "-2", "--to", "2",
    ];
    args.extend_from_slice(SMALL);
    let out = seqhv(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "offset,mean,std");
    assert_eq!(text.lines().filter(|l| !l.starts_with(['o', '#'])).count(), 5);
    assert!(text.contains("# seed 42"));
}

#[test]
fn radius_sweep_runs_on_priming_data() {
    let data = synthetic_data();
    let mut args = vec![
        "sweep", "--mode", "radius", "--data", &data, "--from", "1", "--to", "2",
        "--dim", "512", "--realizations", "3",
    ];
    let out = seqhv(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().next().unwrap(), "radius,mean,std");
    args[1] = "--mode";
    let out = seqhv(&["sweep", "--mode", "radius", "--from", "1", "--to", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn empty_sweep_range_is_a_usage_error() {
    let out = seqhv(&["sweep", "--mode", "profile", "--string", "ab", "--from", "3", "--to", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = seqhv(&["sweep", "--mode", "profile", "--from", "0", "--to", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--string"));
}

#[test]
fn encode_dumps_match_the_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let out = seqhv(&["encode", "abc", "--dim", "64", "--realizations", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next().unwrap(), "index,re,im");
    assert_eq!(text.lines().count(), 65);

    let bin_path = dir.path().join("hv.bin");
    let out = seqhv(&["encode", "abc", "--dim", "64", "--format", "bin", "--output", bin_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(fs::metadata(&bin_path).unwrap().len(), 64 * 16);

    let out = seqhv(&["encode", "abc", "--format", "bin"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--output"));
}

#[test]
fn encode_csv_round_trips_through_the_binary_dump() {
    let dir = tempfile::tempdir().unwrap();
    let bin_path = dir.path().join("hv.bin");
    let csv_out = seqhv(&["encode", "ab", "--dim", "8", "--seed", "5"]);
    seqhv(&["encode", "ab", "--dim", "8", "--seed", "5", "--format", "bin", "--output", bin_path.to_str().unwrap()]);
    let bytes = fs::read(&bin_path).unwrap();
    let text = stdout(&csv_out);
    for (i, line) in text.lines().skip(1).enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        let re = f64::from_le_bytes(bytes[i * 16..i * 16 + 8].try_into().unwrap());
        let im = f64::from_le_bytes(bytes[i * 16 + 8..i * 16 + 16].try_into().unwrap());
        assert_eq!(fields[1].parse::<f64>().unwrap(), re);
        assert_eq!(fields[2].parse::<f64>().unwrap(), im);
    }
}
