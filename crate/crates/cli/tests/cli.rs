use std::process::{Command, Output};

use serde_json::Value;

fn dwork(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dwork")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = dwork(&a);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count_reports_schema() {
    let v = json(&["count", "--model", "x", "--lambda", "2", "--p", "7"]);
    for key in ["model", "lambda", "p", "k", "count", "predicted_tns", "passed"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["count"], 96);
    assert_eq!(v["predicted_tns"], 7);
    assert_eq!(v["passed"], true);
    let y = json(&["count", "--model", "y", "--lambda", "2", "--p", "7"]);
    assert_eq!(y["count"], 180);
}

#[test]
fn bad_inputs_exit_with_two() {
    for args in [
        &["count", "--model", "m", "--lambda", "0", "--p", "7"][..],
        &["count", "--model", "x", "--lambda", "2", "--p", "2"],
        &["verify", "--lambda", "1"],
        &["count", "--model", "x", "--lambda", "1/0", "--p", "7"],
        &["lines", "--surface", "0,0,4"],
        &["--jobs", "0", "tables"],
        &["galois-lines", "--surface", "0,1,1", "--flip", "I"],
    ] {
        assert_eq!(dwork(args).status.code(), Some(2), "{args:?}");
    }
    let o = dwork(&["count", "--model", "m", "--lambda", "0", "--p", "7"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("LambdaZero"));
    let o = dwork(&["verify", "--lambda", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("LambdaSingular"));
}

#[test]
fn verify_range_and_ramified_prime() {
    let v = json(&["verify", "--lambda", "2", "--primes", "7..97"]);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["skipped"], 0);
    assert_eq!(v["passed"], 22);
    let o = dwork(&["verify", "--lambda", "2", "--primes", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped: RamifiedPrime"));
}

#[test]
fn tables_and_eigen_text() {
    let t = stdout(&dwork(&["tables"]));
    assert!(t.contains("chi_pr: 21 5 -7 -3 5 5 5 3 -3 -3"));
    assert!(t.contains("chi_pr = rho2:4 rho3:1 rho5:1 phi2:1 phi4:1 phi5:1"));
    assert!(stdout(&dwork(&["eigen", "--dim", "19", "--lambda", "2"])).contains("multiplicities: 1 3 3 6 6"));
    assert!(stdout(&dwork(&["eigen", "--dim", "8", "--lambda", "2"])).contains("multiplicities: 1 1 1 2 3"));
    let d = stdout(&dwork(&["decompose-chipr"]));
    assert!(d.contains("sum of multiplicity * degree = 21"));
    assert!(d.contains("rho5 | S3 = sign + standard"));
}

#[test]
fn eigen_json_rows() {
    let v = json(&["eigen", "--dim", "19", "--lambda", "2"]);
    let rows = v["eigenspaces"].as_array().unwrap();
    let mut got: Vec<(String, u64)> = rows
        .iter()
        .map(|r| (r["square_class"].as_str().unwrap().to_string(), r["multiplicity"].as_u64().unwrap()))
        .collect();
    got.sort();
    let want: Vec<(String, u64)> = [("-3", 3), ("-30", 6), ("-5", 3), ("1", 1), ("30", 6)]
        .iter()
        .map(|(a, b)| (a.to_string(), *b))
        .collect();
    assert_eq!(got, want);
}

#[test]
fn lines_and_permutations() {
    let v = json(&["lines", "--lambda", "2", "--surface", "0,1,4"]);
    let lines = v["lines"].as_array().unwrap();
    assert_eq!(lines.len(), 56);
    assert!(lines.iter().all(|l| l["linear"].as_array().unwrap().iter().all(|c| c.as_array().unwrap().len() == 16)));
    let g = json(&["galois-lines", "--lambda", "2", "--flip", "I,minus"]);
    assert_eq!(g["involution"], true);
    assert_eq!(g["group_checks"]["commute"], true);
    let id = stdout(&dwork(&["galois-lines", "--lambda", "3"]));
    assert!(id.lines().nth(1) == Some("()"));
}

#[test]
fn curve_counts_worked_instance() {
    let o = stdout(&dwork(&["curve-counts", "--lambda", "2", "--p", "7"]));
    assert!(o.contains("n_x = 1, n_y = 1, bijection ok, roots [5] -> [2]"));
}

#[test]
fn output_is_identical_across_job_counts() {
    let args = |jobs: &'static str| vec!["--jobs", jobs, "verify", "--lambda", "3/2", "--primes", "3..60", "--k", "1"];
    let a = dwork(&args("1"));
    let b = dwork(&args("4"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(dwork(&["lines", "--lambda", "3"]).stdout, dwork(&["--jobs", "2", "lines", "--lambda", "3"]).stdout);
}
