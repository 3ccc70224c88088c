use std::path::Path;
use std::process::{Command, Output};

fn ybe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ybe")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn validate_flip_and_bad_rows() {
    let dir = tempfile::tempdir().unwrap();
    let flip = write(dir.path(), "flip.txt", "2\n2 1\n2 1\n");
    assert_eq!(ybe(&["validate", &flip]).status.code(), Some(0));

    let bad = write(dir.path(), "bad.txt", "# not a permutation\n2\n1 1\n2 1\n");
    let o = ybe(&["validate", &bad]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    // rows are permutations, but the criterion fails
    let fails = write(dir.path(), "fails.txt", "3\n2 1 3\n1 2 3\n1 2 3\n");
    let o = ybe(&["--format", "json", "validate", &fails]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["valid"], false);
}

#[test]
fn construct_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = ybe(&["construct", "--primes", "2"]);
    assert_eq!(stdout(&o), "2\n2 1\n2 1\n");

    let path = dir.path().join("f23.txt");
    let p = path.to_str().unwrap();
    assert_eq!(ybe(&["construct", "--primes", "2,3", "-o", p]).status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert_eq!(ybe(&["validate", p]).status.code(), Some(0));
    let parsed = ybe::solution::io::parse(&text).unwrap();
    assert_eq!(ybe::solution::io::write(&parsed), text);

    let o = ybe(&["construct", "--primes", "2,3,5"]);
    assert_eq!(stdout(&o).lines().next(), Some("30"));
    assert_eq!(ybe(&["construct", "--primes", "2,2"]).status.code(), Some(3));
    assert_eq!(ybe(&["construct", "--primes", "4"]).status.code(), Some(3));
}

#[test]
fn analyze_reports() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.txt", "3\n2 3 1\n2 3 1\n2 3 1\n");
    let r = json(&ybe(&["--format", "json", "analyze", &c3]));
    assert_eq!(r["solution"]["mp_level"], 1);
    assert_eq!(r["solution"]["simple"], true);
    assert_eq!(r["group"]["order"], 3);

    let f23 = dir.path().join("f23.txt");
    ybe(&["construct", "--primes", "2,3", "-o", f23.to_str().unwrap()]);
    let r = json(&ybe(&["--format", "json", "analyze", f23.to_str().unwrap()]));
    assert_eq!(r["solution"]["mp_level"], 2);
    assert_eq!(r["solution"]["simple"], false);
    assert_eq!(r["group"]["order"], 18);

    let t4 = write(dir.path(), "t4.txt", "4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n1 2 3 4\n");
    let r = json(&ybe(&["--format", "json", "analyze", &t4]));
    assert_eq!(r["solution"]["indecomposable"], false);
    assert_eq!(r["solution"]["mp_level"], 1);
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f23 = dir.path().join("f23.txt");
    let p = f23.to_str().unwrap();
    ybe(&["construct", "--primes", "2,3", "-o", p]);
    for cmd in ["analyze", "verify-theorems", "retract-tower", "simple-check"] {
        let a = ybe(&["--format", "json", "--seed", "7", cmd, p]);
        let b = ybe(&["--format", "json", "--seed", "7", cmd, p]);
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let t = ybe(&["--seed", "7", cmd, p]);
        assert_eq!(t.stdout, ybe(&["--seed", "7", cmd, p]).stdout, "{cmd}");
    }
}

#[test]
fn verify_theorems_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f23 = dir.path().join("f23.txt");
    ybe(&["construct", "--primes", "2,3", "-o", f23.to_str().unwrap()]);
    let o = ybe(&["--format", "json", "verify-theorems", f23.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_eq!(r["passed"], true);
    assert!(r["theorems"].as_array().unwrap().len() >= 5);

    let t6 = write(dir.path(), "t6.txt", &format!("6\n{}", "1 2 3 4 5 6\n".repeat(6)));
    let o = ybe(&["verify-theorems", &t6]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("precondition failed"));

    // size 4 is not square-free
    let c4 = write(dir.path(), "c4.txt", &format!("4\n{}", "2 3 4 1\n".repeat(4)));
    assert_eq!(ybe(&["verify-theorems", &c4]).status.code(), Some(3));
}

#[test]
fn retract_tower_and_simple_check() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.txt");
    ybe(&["construct", "--primes", "3,2", "-o", f.to_str().unwrap()]);
    let r = json(&ybe(&["--format", "json", "retract-tower", f.to_str().unwrap()]));
    assert_eq!(r["sizes"], serde_json::json!([6, 3, 1]));
    assert_eq!(r["levels"][1]["table"], serde_json::json!([[2, 3, 1], [2, 3, 1], [2, 3, 1]]));

    let r = json(&ybe(&["--format", "json", "simple-check", f.to_str().unwrap()]));
    assert_eq!(r["simple"], false);
    assert_eq!(r["witness"].as_array().unwrap().len(), 3);
}

#[test]
fn enumerate_census_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("classes");
    let o = ybe(&["--format", "json", "enumerate", "--size", "3", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    let count = r["count"].as_u64().unwrap() as usize;
    assert_eq!(std::fs::read_dir(&out).unwrap().count(), count);
    assert_eq!(r["level_bound"]["passed"], true);
    for entry in std::fs::read_dir(&out).unwrap() {
        let p = entry.unwrap().path();
        assert_eq!(ybe(&["validate", p.to_str().unwrap()]).status.code(), Some(0));
    }

    let r = json(&ybe(&["--format", "json", "enumerate", "--size", "1"]));
    assert_eq!(r["count"], 1);
    let r = json(&ybe(&["--format", "json", "enumerate", "--size", "2"]));
    assert_eq!(r["count"], 2);
    assert_eq!(ybe(&["enumerate", "--size", "5"]).status.code(), Some(3));
}
