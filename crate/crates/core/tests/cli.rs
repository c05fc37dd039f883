use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-jones")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn cells_listing() {
    let out = run(&["cells", "--n", "6", "--rep", "s1s3s5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let cell = &v["payload"]["cells"][0];
    assert_eq!(cell["size"], 5);
    assert_eq!(cell["shape"], "[3,3]");
    let words: Vec<&str> = cell["members"].as_array().unwrap().iter().map(|m| m["word"].as_str().unwrap()).collect();
    assert_eq!(words, ["s1s3s5", "s1s4s3s5", "s2s1s3s5", "s2s1s4s3s5", "s3s2s1s4s3s5"]);
}

#[test]
fn all_cells_of_s4_partition_the_group() {
    let v = json(&run(&["cells", "--n", "4"]));
    let sizes: usize = v["payload"]["cells"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap() as usize).sum();
    assert_eq!(sizes, 24);
}

#[test]
fn jones_json_has_prefactor_and_matrices() {
    let out = run(&["jones", "--genus", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["prefactor"], "t^-1");
    assert_eq!(v["payload"]["q"], "t^5");
    assert_eq!(v["payload"]["matrices_display"][0][0][0], "-t^-6");
    assert_eq!(v["payload"]["matrices_display"].as_array().unwrap().len(), 5);
}

#[test]
fn certify_m6() {
    let out = run(&["certify", "--genus", "2", "--power", "6", "--scheme", "even"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["payload"]["modulus_display"], "9.8989795");
    assert_eq!(v["payload"]["verdict"], "infinite-order");
}

#[test]
fn certify_inconclusive_exits_one() {
    let out = run(&["certify", "--power", "5", "--scheme", "odd"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["payload"]["verdict"], "inconclusive");
}

#[test]
fn sweep_csv() {
    let out = run(&["sweep", "--genus", "2", "--powers", "5..12", "--out", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,scheme,k,parameter,modulus,verdict"));
    let row6 = text.lines().find(|l| l.starts_with("6,")).unwrap();
    assert!(row6.ends_with("9.8989795,infinite-order"), "{row6}");
    assert_eq!(text.lines().count(), 9);
    // m = 5 is inconclusive, so not every verdict succeeded
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn sweep_to_file() {
    let path = std::env::temp_dir().join(format!("hecke-jones-sweep-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let out = run(&["sweep", "--powers", "6..6", "--scheme", "even", "--format", "csv", "--out", p]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.contains("6,even,,q=exp(pi i/3),9.8989795,infinite-order"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--genus", "3"]).status.code(), Some(0));
    let out = run(&["verify", "--shape", "4,1,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["payload"]["all_passed"], false);
}

#[test]
fn klpoly_single_pair() {
    let v = json(&run(&["klpoly", "--n", "4", "--y", "s2", "--w", "s2s1s3s2"]));
    assert_eq!(v["payload"]["polynomials"][0]["display"], "q + 1");
    assert_eq!(v["payload"]["polynomials"][0]["mu"], "1");
}

#[test]
fn wgraph_edges() {
    let v = json(&run(&["wgraph", "--n", "3", "--rep", "s1"]));
    assert_eq!(v["payload"]["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["payload"]["edges"].as_array().unwrap().len(), 1);
}

#[test]
fn burau_and_witness() {
    assert_eq!(run(&["burau", "--n", "3"]).status.code(), Some(0));
    let out = run(&["witness", "--power", "7", "--scheme", "odd"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["payload"]["verdict"], "free-subgroup");
    let out = run(&["witness", "--power", "2", "--scheme", "even"]);
    assert_eq!(out.status.code(), Some(1));
    let msg = json(&out)["error"]["message"].as_str().unwrap().to_string();
    assert!(msg.contains("2, 4, 6, 10"), "{msg}");
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["certify", "--power", "x"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--powers", "5..40", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}

#[test]
fn scheme_mismatch_is_a_domain_error() {
    let out = run(&["certify", "--power", "7", "--scheme", "even"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "quotient");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["cells", "--n", "5"][..],
        &["jones", "--genus", "3"],
        &["sweep", "--powers", "5..30"],
        &["klpoly", "--n", "4", "--format", "csv"],
        &["witness", "--power", "9"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}
