use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubeclass")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = run(&a);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count3_over_rationals() {
    let o = run(&["count3", "--d", "0", "--disc", "-23"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "count_cl3: 3"));
    assert_eq!(json(&["count3", "--d", "0", "--disc", "-23"])["results"]["count_cl3"], 3);
}

#[test]
fn density_at_two() {
    let o = run(&["density", "--d", "0", "--prime", "2"]);
    assert!(stdout(&o).lines().any(|l| l == "density: 3/4"));
    let v = json(&["density", "--d", "-5", "--prime", "2", "--ideal", "(2,1+w)"]);
    assert_eq!(v["results"]["primes"][0]["steinitz_valuation"], 1);
    assert_eq!(v["results"]["density"], "3/4");
}

#[test]
fn roundtrip_reports_ok() {
    let o = run(&["roundtrip", "--form", "1,0,0,1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("exact round-trip: OK"));
    let o = run(&["roundtrip", "--d", "-5", "--form", "2,1,1/2-1/2*w,-1@(2,1+w)"]);
    assert!(stdout(&o).contains("exact round-trip: OK"), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn base_info_examples() {
    let v = json(&["base-info", "--d", "-5"]);
    assert_eq!(v["results"]["class_number"], 2);
    assert_eq!(v["results"]["class_reps"].as_array().unwrap().len(), 2);
    assert_eq!(json(&["base-info", "--d", "-1"])["results"]["class_number"], 1);
    assert_eq!(run(&["base-info", "--d", "12"]).status.code(), Some(2));
}

#[test]
fn form_and_quadruple_convert_both_ways() {
    let q = json(&["form2quad", "--form", "1,-1,0,3"]);
    let r = &q["results"];
    assert_eq!(r["balanced"], true);
    let quad = ["t", "u", "alpha", "beta", "delta", "s"].map(|k| r[k].as_str().unwrap().to_string()).join(";");
    let f = json(&["quad2form", "--d", "0", "--quad", &quad]);
    assert_eq!(f["results"]["form"], "1,-1,0,3@(1)");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["roundtrip", "--form", "1,0,0"]).status.code(), Some(2));
    // degenerate form
    assert_eq!(run(&["roundtrip", "--form", "0,0,0,1"]).status.code(), Some(3));
    assert_eq!(run(&["quad2form", "--d", "0", "--quad", "-1;0;[1;1];[0;2];[1;-7];3"]).status.code(), Some(3));
    assert_eq!(run(&["count3", "--d", "2", "--disc", "5"]).status.code(), Some(5));
}

#[test]
fn enumerate_is_deterministic() {
    let args = ["enumerate", "--d", "0", "--disc", "-108", "--workers", "2"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let v = json(&["enumerate", "--d", "0", "--disc", "-23", "--group", "sl"]);
    assert_eq!(v["results"]["projective_orbits"], 3);
    assert_eq!(v["results"]["count_cl3"], 3);
}
