use std::process::{Command, Output};

use appell_core::json::{poly_from_json, BasisElementJson, GmtElementJson, PolyJson};
use appell_core::ball::l2_inner_product;
use serde_json::Value;

fn appell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_appell")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn hdr_basis_has_seven_elements_and_round_trips() {
    let out = appell(&["basis-hdr", "--m", "3", "--s", "1", "--k", "2", "--field", "real"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 7);
    assert_eq!(v["pi_power"], 1);
    let elements: Vec<BasisElementJson> = serde_json::from_value(v["elements"].clone()).unwrap();
    for e in &elements {
        let p = e.poly().unwrap();
        assert!(p.dirac_plus().is_zero() && p.dirac_minus().is_zero());
        let n = l2_inner_product(&p, &p).unwrap().value;
        assert_eq!(appell_core::scalar::format_rational(n.re()), e.norm2);
        assert_eq!(e.label().validate().ok(), Some(()));
    }
    let first = &v["elements"][0];
    for key in ["m", "field", "s", "k", "nu", "mu", "norm2", "terms"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn gmt_and_harmonic_outputs_parse() {
    let out = appell(&["basis-gmt", "--m", "4", "--S", "1,3", "--k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let elements: Vec<GmtElementJson> = serde_json::from_value(v["elements"].clone()).unwrap();
    assert_eq!(elements.len(), v["count"].as_u64().unwrap() as usize);
    assert!(elements.iter().all(|e| e.poly().unwrap().dirac().is_zero()));

    let out = appell(&["basis-harmonic", "--m", "3", "--k", "2"]);
    assert_eq!(json(&out)["count"], 5);
}

#[test]
fn dims_table_is_consistent() {
    let out = appell(&["dims", "--m", "4", "--kmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["consistent"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5 * 4);
}

#[test]
fn verify_appell_exits_zero() {
    let out = appell(&["verify", "--suite", "appell", "--m", "3", "--s", "1", "--kmax", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn gram_reports_pi_power_and_diagonal() {
    let out = appell(&["gram", "--m", "4", "--s", "2", "--k", "1"]);
    let v = json(&out);
    assert_eq!(v["gram"]["pi_power"], 2);
    assert_eq!(v["diagonal"], true);
    assert!(v["gram"].get("entries_im").is_none());
    let out = appell(&["gram", "--family", "harmonic", "--m", "3", "--k", "1", "--field", "complex"]);
    assert_eq!(json(&out)["gram"]["size"], 3);
}

#[test]
fn taylor_accepts_polynomial_input() {
    let dir = tempfile::tempdir().unwrap();
    let gen = appell(&["taylor", "--m", "3", "--s", "1", "--kmax", "2", "--seed", "3"]);
    assert_eq!(gen.status.code(), Some(0));
    let v = json(&gen);
    assert_eq!(v["round_trip"], true);
    let input = dir.path().join("g.json");
    std::fs::write(&input, serde_json::to_vec(&v["input"]).unwrap()).unwrap();
    let out = appell(&["taylor", "--m", "3", "--s", "1", "--kmax", "2", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["coefficients"], v["coefficients"]);

    let p: PolyJson = serde_json::from_value(v["input"].clone()).unwrap();
    let mut q = poly_from_json(&p).unwrap();
    q = q.x_mul();
    std::fs::write(&input, serde_json::to_vec(&appell_core::json::poly_to_json(&q)).unwrap()).unwrap();
    let out = appell(&["taylor", "--m", "3", "--s", "1", "--kmax", "3", "--input", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(appell(&["basis-hdr", "--m", "3", "--s", "5", "--k", "1"]).status.code(), Some(2));
    assert_eq!(appell(&["basis-hdr", "--m", "3", "--s", "1"]).status.code(), Some(2));
    assert_eq!(appell(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(appell(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(appell(&["--help"]).status.code(), Some(0));
    let out = appell(&["basis-hdr", "--m", "3", "--s", "1", "--k", "1", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_file_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("basis.json");
    let out = appell(&["basis-hdr", "--m", "3", "--s", "2", "--k", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let names: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names, vec![std::ffi::OsString::from("basis.json")]);
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["count"], 5);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = ["basis-hdr", "--m", "4", "--s", "1", "--k", "2"];
    let one = Command::new(env!("CARGO_BIN_EXE_appell")).args(args).env("APPELL_THREADS", "1").output().unwrap();
    let many = Command::new(env!("CARGO_BIN_EXE_appell")).args(args).env("APPELL_THREADS", "4").output().unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_appell")).args(args).env("APPELL_THREADS", "0").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
