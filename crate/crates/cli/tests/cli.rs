use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cohmackey"))
        .args(args)
        .env_remove("MACKEY_SIZE_CAP")
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn lattice_of_s3() {
    let out = run(&["lattice", &data("s3.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "lattice");
    assert_eq!(r["results"]["subgroup_count"], 6);
    assert_eq!(r["results"]["mu_trivial_whole"], 3);
    let top = &r["results"]["subgroups"][5]["ell_hypoelementary"];
    assert_eq!(top["2"], false);
    assert_eq!(top["3"], true);
    assert!(stderr(&out).contains("2-hypoelementary: no, 3-hypoelementary: yes"));
    assert_eq!(r["inputs_digest"].as_str().unwrap().len(), 64);
}

#[test]
fn lattice_of_trivial_group() {
    let out = run(&["lattice", &data("trivial.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["subgroup_count"], 1);
}

#[test]
fn malformed_json_exits_2() {
    let out = run(&["lattice", &data("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let out = run(&["lattice", &data("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fixed_points_of_s3() {
    let out = run(&["mackey-verify", &data("s3.json"), &data("z2_two_generators.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["pass"], true);
    assert_eq!(r["witnesses"].as_array().unwrap().len(), 0);
    let checks = r["results"]["axioms"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 8);
}

#[test]
fn cohomology_of_c2() {
    let out = run(&[
        "mackey-verify",
        &data("c2.json"),
        &data("z2_one_generator.json"),
        "--constructor",
        "cohomology",
        "--degree",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let top = &r["results"]["values"]["subgroups"][1];
    assert_eq!(top["order"], 2);
    assert_eq!(top["display"], "Z/2");
    assert_eq!(r["results"]["values"]["subgroups"][0]["display"], "0");
}

#[test]
fn cohomology_cap_exits_2() {
    let args = [
        "mackey-verify",
        &data("d6.json"),
        &data("z2_two_generators.json"),
        "--constructor",
        "cohomology",
        "--degree",
        "2",
    ];
    let out = run(&args);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("20736"));
    // a raised cap lets the same degree through the size check; n = 3 is still refused
    let out = Command::new(env!("CARGO_BIN_EXE_cohmackey"))
        .args(["mackey-verify", &data("c2.json"), &data("z2_one_generator.json"), "--constructor", "cohomology", "--degree", "3"])
        .env("MACKEY_SIZE_CAP", "100000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn size_cap_env_var_applies_to_closure() {
    let out = Command::new(env!("CARGO_BIN_EXE_cohmackey"))
        .args(["lattice", &data("d6.json")])
        .env("MACKEY_SIZE_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_cohmackey"))
        .args(["lattice", &data("d6.json")])
        .env("MACKEY_SIZE_CAP", "lots")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invalid_module_exits_2() {
    let out = run(&["mackey-verify", &data("s3.json"), &data("bad_action_s3.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not multiplicative"));
    let out = run(&["mackey-verify", &data("s3.json"), &data("z2_one_generator.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn chain_sums_for_s3() {
    let out = run(&["bley-boltje", &data("s3.json"), &data("z2_two_generators.json"), "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let t = &r["results"]["targets"][0];
    assert_eq!(t["chain_sums"]["isomorphic"], true);
    assert_eq!(t["chain_sums"]["odd_sum"]["invariant_factors"].as_array().unwrap().len(), 10);
    for s in t["moebius_sums"].as_array().unwrap() {
        assert_eq!(s["sum"], 0);
    }
    assert!(stderr(&out).contains("(Z/2)^10"));
}

#[test]
fn chain_sums_for_c4_are_informational() {
    let out = run(&["bley-boltje", &data("c4.json"), &data("z2_one_generator.json"), "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    let t = &r["results"]["targets"][0];
    assert_eq!(t["chain_sums"]["hypothesis_holds"], false);
    assert!(t["chain_sums"]["hypothesis"].as_str().unwrap().contains("2-hypoelementary"));
}

#[test]
fn integral_chain_sums_for_d6() {
    let out = run(&["bley-boltje", &data("d6.json"), &data("z2_two_generators.json"), "--integral"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["targets"][0]["chain_sums"]["isomorphic"], true);
}

#[test]
fn subgroup_selectors() {
    let base = ["bley-boltje", &data("s3.json"), &data("z3_sign_s3.json"), "--ell", "3"];
    let mut args = base.to_vec();
    args.extend(["--subgroup", "all"]);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["targets"].as_array().unwrap().len(), 6);

    let mut args = base.to_vec();
    args.extend(["--subgroup", "[[1, 2, 0]]"]);
    let out = run(&args);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["targets"][0]["chain_sums"]["target_order"], 3);

    for bad in ["17", "[[0, 0, 1]]", "[[1, 0]]", "bogus"] {
        let mut args = base.to_vec();
        args.extend(["--subgroup", bad]);
        assert_eq!(run(&args).status.code(), Some(2), "selector {bad}");
    }
}

#[test]
fn norm_demo_rank_and_checks() {
    let out = run(&["norm-demo", "--modulus", "5", "--degree", "3", "--ranks", "2,2,2", "--seed", "11"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["norm_rank"], "8");
    assert_eq!(r["results"]["seed"], 11);
    assert_eq!(r["pass"], true);
}

#[test]
fn norm_demo_degree_one() {
    let out = run(&["norm-demo", "--modulus", "0", "--degree", "1", "--ranks", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn norm_demo_rejects_bad_parameters() {
    for args in [
        vec!["norm-demo", "--modulus", "1", "--degree", "2"],
        vec!["norm-demo", "--modulus", "5", "--degree", "0"],
        vec!["norm-demo", "--modulus", "5", "--degree", "2", "--ranks", "2,2,2"],
        vec!["norm-demo", "--modulus", "5", "--degree", "12"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn reports_are_byte_deterministic() {
    let norm = ["norm-demo", "--modulus", "12", "--degree", "3", "--ranks", "1,2,3", "--seed", "7"];
    assert_eq!(run(&norm).stdout, run(&norm).stdout);
    let bb = ["bley-boltje", &data("s3.json"), &data("z2_two_generators.json"), "--ell", "2", "--subgroup", "all"];
    assert_eq!(run(&bb).stdout, run(&bb).stdout);
    let other_seed = ["norm-demo", "--modulus", "12", "--degree", "3", "--ranks", "1,2,3", "--seed", "8"];
    assert_ne!(report(&run(&norm))["inputs_digest"], report(&run(&other_seed))["inputs_digest"]);
}
