use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn arboreal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arboreal"))
        .args(args)
        .env_remove("ARBOREAL_MAX_TREES")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("arboreal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_reports_schema_and_passes() {
    for (suite, n) in [("recursion", "5"), ("forest-count", "7"), ("prufer", "6")] {
        let out = arboreal(&["verify", "--suite", suite, "--n-max", n]);
        assert!(out.status.success(), "{suite}");
        let v = json(&out);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["passed"], true);
        assert_eq!(v["failures"].as_array().unwrap().len(), 0);
        assert!(String::from_utf8_lossy(&out.stderr).contains("wall time"));
    }
}

#[test]
fn unknown_suite_fails() {
    let out = arboreal(&["verify", "--suite", "nope"]);
    assert!(!out.status.success());
}

#[test]
fn guard_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_arboreal"))
        .args(["enumerate", "--n", "6"])
        .env("ARBOREAL_MAX_TREES", "100")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("100"));
    let out = arboreal(&["enumerate", "--n", "6"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 1296);
}

#[test]
fn prufer_and_distance() {
    let v = json(&arboreal(&["prufer", "encode", "n=4; edges=0-3,1-3,2-3"]));
    assert_eq!(v["word"], serde_json::json!([3, 3]));
    let v = json(&arboreal(&["prufer", "decode", "--n", "4", "1 2"]));
    assert_eq!(v["tree"], "n=4; edges=0-1,1-2,2-3");
    let v = json(&arboreal(&[
        "distance",
        "n=4; edges=0-1,0-2,0-3",
        "n=4; edges=0-3,1-3,2-3",
    ]));
    assert_eq!(v["distance"], 2);
}

#[test]
fn ball_sizes_as_strings() {
    let v = json(&arboreal(&[
        "ball",
        "--tree",
        "n=5; edges=0-1,0-2,0-3,0-4",
        "--radius",
        "1",
    ]));
    assert_eq!(v["size"], "13");
    let v = json(&arboreal(&[
        "ball",
        "--forest",
        "n=10; edges=1-2,4-5,5-6,7-8,8-9",
    ]));
    assert_eq!(v["size"], "18000");
}

#[test]
fn tables() {
    let out = arboreal(&["table", "--kind", "forests", "--n", "5"]);
    let csv = String::from_utf8(out.stdout).unwrap();
    let counts: Vec<&str> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(counts, ["125", "110", "45", "10", "1"]);
    let out = arboreal(&["table", "--kind", "balls", "--n", "4", "--t", "1"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 17);
}

#[test]
fn construct_certify_decode_channel() {
    let path = scratch("star6.json");
    let p = path.to_str().unwrap();
    let out = arboreal(&["construct", "--kind", "star", "--n", "6", "--out", p]);
    assert!(out.status.success());
    assert_eq!(json(&out)["size"], 6);

    let cert = json(&arboreal(&["certify", p]));
    assert_eq!(
        (cert["ok"].clone(), cert["min_distance"].clone()),
        (true.into(), 4.into())
    );

    let v = json(&arboreal(&[
        "decode",
        p,
        "--forest",
        "n=6; edges=0-2,1-2",
        "--decoder",
        "star",
    ]));
    assert_eq!(v["tree"], "n=6; edges=0-2,1-2,2-3,2-4,2-5");

    let ok = arboreal(&["channel", p, "--erasures", "3", "--exhaustive"]);
    assert!(ok.status.success());
    assert_eq!(json(&ok)["success"], "60/60");

    // Beyond capability: failures are reported but the run still succeeds.
    let beyond = arboreal(&["channel", p, "--erasures", "4", "--exhaustive"]);
    assert!(beyond.status.success());
    assert_eq!(json(&beyond)["within_capability"], false);

    let sampled = arboreal(&[
        "channel", p, "--errors", "1", "--trials", "40", "--seed", "3",
    ]);
    assert_eq!(json(&sampled)["success"], "40/40");
    let unseeded = arboreal(&["channel", p, "--errors", "1", "--trials", "40"]);
    assert!(!unseeded.status.success());
}

#[test]
fn certification_failure_sets_exit_status() {
    let path = scratch("bad.json");
    std::fs::write(
        &path,
        r#"{"n":4,"d":3,"codewords":[["0-1","0-2","0-3"],["0-1","1-2","1-3"]]}"#,
    )
    .unwrap();
    let out = arboreal(&["certify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["ok"], false);
}

#[test]
fn two_star_parameter_guard() {
    let out = arboreal(&["construct", "--kind", "twostar", "--n", "11", "--m", "3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("3n/4"));
}

#[test]
fn search_and_bounds() {
    let v = json(&arboreal(&["search", "--n", "5", "--d", "4"]));
    assert_eq!(v["size"], 2);
    let v = json(&arboreal(&["bounds", "--n", "10", "--d", "8"]));
    assert_eq!(v["bounds"][0]["bound"], "10");
    assert_eq!(v["bounds"][0]["provenance"], "improved-(n-2)");
}
