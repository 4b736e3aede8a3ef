use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const FIRST_EXAMPLE: &str = "# nine rational points\n0,1\n0,3\n1,0\n1,2\n1,3\n1,4\n2,1\n2,2\n3,1\n";

fn vanish(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vanish")).args(args).output().expect("spawn vanish")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_json_counts() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.csv", FIRST_EXAMPLE);
    let o = vanish(&["compute", "--field", "rational", "--order", "inlex", "--algo", "spbm", "--points", &pts, "--out", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["field"], "rational");
    assert_eq!(v["algorithm"], "spbm");
    assert_eq!(v["G"].as_array().unwrap().len(), 4);
    assert_eq!(v["N"].as_array().unwrap().len(), 9);
    assert_eq!(v["Q"].as_array().unwrap().len(), 9);
    assert_eq!(v["G"][0][0], serde_json::json!([4, 0, "1"]));
    assert_eq!(v["N"][1], serde_json::json!([0, 1]));
    assert_eq!(v["pointPermutation"].as_array().unwrap().len(), 9);
    assert!(stderr(&o).contains("verify: passed"));
}

#[test]
fn compute_text_and_auto() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.csv", FIRST_EXAMPLE);
    let o = vanish(&["compute", "--field", "rational", "--order", "inlex", "--points", &pts]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("G (4):\n  x^4-6x^3+11x^2-6x\n"), "{out}");
    assert!(out.contains("  (1/2)y\n"));
    assert!(out.trim_end().ends_with("verify: passed (9 checks, 0 failed)"));

    let o = vanish(&["compute", "--field", "q:7", "--order", "tdinlex", "--points", &pts, "--out", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algorithm"], "gpbm");
    assert_eq!(v["field"], "q:7");
    for algo in ["bm", "gpbm"] {
        let o = vanish(&["compute", "--field", "q:7", "--order", "tdinlex", "--algo", algo, "--points", &pts, "--out", "json"]);
        let w: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!((&w["G"], &w["algorithm"]), (&v["G"], &Value::from(algo)));
    }
}

#[test]
fn usage_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.csv", FIRST_EXAMPLE);
    let dup = write(&dir, "dup.csv", "1,2\n3,4\n# again\n1,2\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["compute", "--field", "q:6", "--order", "lex", "--points", &pts],
        vec!["compute", "--field", "rational", "--order", "grevlex", "--points", &pts],
        vec!["compute", "--field", "rational", "--order", "tdinlex", "--algo", "spbm", "--points", &pts],
        vec!["compute", "--field", "rational", "--order", "lex", "--points", "/nonexistent/pts.csv"],
        vec!["compute", "--field", "rational", "--order", "lex", "--points", &dup],
        vec!["gen", "--field", "q:3", "--n", "10"],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = vanish(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
    let o = vanish(&["compute", "--field", "rational", "--order", "lex", "--points", &dup]);
    assert!(stderr(&o).contains("lines 1 and 4"), "{}", stderr(&o));
}

#[test]
fn gen_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = vanish(&["gen", "--field", "q:23", "--n", "200", "--seed", "1", "-o", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let (ta, tb) = (fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(ta, tb);
    let text = String::from_utf8(ta).unwrap();
    let lines: std::collections::HashSet<&str> = text.lines().collect();
    assert_eq!((lines.len(), text.lines().count()), (200, 200));

    let o = vanish(&["gen", "--field", "q:23", "--n", "200", "--seed", "2"]);
    assert_ne!(stdout(&o), text);
    let o = vanish(&["gen", "--field", "rational", "--n", "50", "--seed", "3"]);
    assert_eq!(stdout(&o), stdout(&vanish(&["gen", "--field", "rational", "--n", "50", "--seed", "3"])));
}

#[test]
fn gen_output_round_trips_through_compute() {
    let dir = TempDir::new().unwrap();
    let pts = dir.path().join("pts.csv");
    vanish(&["gen", "--field", "q:17", "--n", "40", "--seed", "9", "-o", pts.to_str().unwrap()]);
    let o = vanish(&["compute", "--field", "q:17", "--order", "tdinlex", "--points", pts.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

fn check_bench_csv(path: &Path, rows: usize) -> String {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algorithm,field,order,size,repetition,wall_nanos,mcs_ratio"));
    let body: Vec<&str> = text.lines().skip(1).filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body.len(), rows, "{text}");
    text
}

#[test]
fn bench_rows_and_summary() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("bench.csv");
    let o = vanish(&[
        "bench", "--field", "q:23", "--order", "lex", "--sizes", "500", "--reps", "5", "--algos", "bm,spbm", "--seed", "1",
        "-o", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = check_bench_csv(&out, 10);
    assert!(text.lines().any(|l| l.starts_with("# median speedup bm/spbm size=500:")), "{text}");
    let rows: Vec<Vec<&str>> = text.lines().skip(1).filter(|l| !l.starts_with('#')).map(|l| l.split(',').collect()).collect();
    assert!(rows[..5].iter().all(|r| r[0] == "bm" && r[6].is_empty()));
    assert!(rows[5..].iter().all(|r| r[0] == "spbm" && r[6] == "1.0"));
    assert_eq!(rows.iter().map(|r| r[4]).collect::<Vec<_>>(), ["0", "1", "2", "3", "4", "0", "1", "2", "3", "4"]);
}

#[test]
fn bench_gpbm_ratio() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("bench.csv");
    let o = vanish(&[
        "bench", "--field", "q:17", "--order", "tdinlex", "--sizes", "30,60", "--reps", "2", "--algos", "bm,auto",
        "-o", out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = check_bench_csv(&out, 8);
    for l in text.lines().filter(|l| l.starts_with("gpbm,")) {
        let ratio: f64 = l.rsplit(',').next().unwrap().parse().unwrap();
        assert!(ratio > 0.0 && ratio <= 1.0);
    }
    let o = vanish(&["bench", "--field", "q:17", "--order", "tdinlex", "--sizes", "10", "--algos", "spbm"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_pass_and_fail() {
    let dir = TempDir::new().unwrap();
    let pts = write(&dir, "pts.csv", FIRST_EXAMPLE);
    let o = vanish(&["compute", "--field", "rational", "--order", "inlex", "--points", &pts, "--out", "json"]);
    let good = write(&dir, "good.json", &stdout(&o));
    let o = vanish(&["verify", "--result", &good, "--points", &pts]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verify: passed"));

    let mut v: Value = serde_json::from_str(&stdout(&vanish(&["compute", "--field", "rational", "--order", "inlex", "--points", &pts, "--out", "json"]))).unwrap();
    v["G"][0][1][2] = Value::from("-5");
    let bad = write(&dir, "bad.json", &v.to_string());
    let o = vanish(&["verify", "--result", &bad, "--points", &pts]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  G vanishes on the points"), "{}", stdout(&o));

    let other = write(&dir, "other.csv", "0,0\n1,1\n");
    let o = vanish(&["verify", "--result", &good, "--points", &other]);
    assert_eq!(o.status.code(), Some(1));

    let junk = write(&dir, "junk.json", "{\"field\": 3}");
    assert_eq!(vanish(&["verify", "--result", &junk, "--points", &pts]).status.code(), Some(2));
}
