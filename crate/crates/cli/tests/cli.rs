use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn wsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsg"))
        .args(args)
        .output()
        .expect("wsg runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("wsg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(code(&wsg(&["analyze", "6", "9", "13", "16"])), 0);
    assert_eq!(code(&wsg(&["analyze", "2", "3"])), 1);
    let bad = wsg(&["analyze", "4", "6"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("gcd"));
    assert_eq!(code(&wsg(&["analyze"])), 2);
    assert_eq!(code(&wsg(&["analyze", "6", "x"])), 2);
    assert_eq!(code(&wsg(&["frobnicate"])), 2);
    assert_eq!(
        code(&wsg(&["analyze", "6", "9", "13", "16", "--order", "x0,x1"])),
        2
    );
}

#[test]
fn analyze_json_report() {
    let o = wsg(&["analyze", "6,9,13,16", "--json"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"]["status"], "NotWeierstrass");
    assert_eq!(v["betti_format"], serde_json::json!([1, 6, 8, 3]));
    assert_eq!(v["certificate"]["witness_codim"], 4);
    assert_eq!(v["semigroup"]["genus"], 13);
    assert!(v["timing_us"].is_null());
    // output is byte-deterministic
    assert_eq!(o.stdout, wsg(&["analyze", "6,9,13,16", "--json"]).stdout);
}

#[test]
fn saved_certificates_verify() {
    let o = wsg(&["analyze", "8", "9", "12", "13", "--json"]);
    let path = scratch("report.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let ok = wsg(&["verify", path.to_str().unwrap()]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stdout));

    let mut v = json(&o);
    v["certificate"]["data"]["selection"]["distinguished_column"] = 2.into();
    std::fs::write(&path, serde_json::to_vec(&v).unwrap()).unwrap();
    assert_eq!(code(&wsg(&["verify", path.to_str().unwrap()])), 1);
    assert_eq!(code(&wsg(&["verify", "/nonexistent/report.json"])), 2);
}

#[test]
fn search_tables() {
    let o = wsg(&[
        "search",
        "--max-genus",
        "16",
        "--criterion",
        "degree-special",
        "--quiet",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "g = 13: {6, 9, 13, 16}, {8, 9, 12, 13}\ng = 14: {6, 9, 14, 17}\ng = 15: {8, 10, 13, 15}\ng = 16: {6, 9, 16, 19}, {8, 11, 12, 15}\n"
    );
    let empty = wsg(&[
        "search",
        "--max-genus",
        "12",
        "--criterion",
        "degree-special",
        "--quiet",
    ]);
    assert_eq!(code(&empty), 0);
    assert_eq!(stdout(&empty), "");
}

#[test]
fn search_is_deterministic_across_job_counts() {
    let args = [
        "search",
        "--max-genus",
        "17",
        "--criterion",
        "any",
        "--json",
        "--quiet",
    ];
    let one = wsg(&[&args[..], &["--jobs", "1"]].concat());
    let four = wsg(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0);
    let (a, b) = (json(&one), json(&four));
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["schema"], 1);
    let hits = a["results"].as_array().unwrap();
    // the gap-sum witness appears first at genus 16
    assert!(hits.iter().any(|h| h["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c == "buchweitz")));
    assert!(hits
        .iter()
        .filter(|h| h["criteria"]
            .as_array()
            .unwrap()
            .iter()
            .any(|c| c == "buchweitz"))
        .all(|h| h["genus"].as_u64().unwrap() >= 16));
}

#[test]
fn search_filters() {
    let o = wsg(&[
        "search",
        "--max-genus",
        "10",
        "--criterion",
        "none",
        "--generators",
        "4",
        "--format",
        "1,4,6,3",
        "--json",
        "--quiet",
    ]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    for h in v["results"].as_array().unwrap() {
        assert_eq!(h["generators"].as_array().unwrap().len(), 4);
    }
    let implied = wsg(&[
        "search",
        "--max-genus",
        "10",
        "--criterion",
        "none",
        "--format",
        "1,4,6,3",
        "--json",
        "--quiet",
    ]);
    assert_eq!(code(&implied), 0);
    assert_eq!(json(&implied)["results"], v["results"]);
    let o = wsg(&[
        "search",
        "--max-genus",
        "13",
        "--criterion",
        "none",
        "--format",
        "1,6,8,3",
        "--json",
        "--quiet",
    ]);
    let hits = json(&o)["results"].as_array().unwrap().clone();
    assert!(hits
        .iter()
        .any(|h| h["generators"] == serde_json::json!([6, 9, 13, 16])));
    let o = wsg(&[
        "search",
        "--max-genus",
        "20",
        "--criterion",
        "degree-special",
        "--min-multiplicity",
        "7",
        "--max-multiplicity",
        "8",
        "--quiet",
    ]);
    assert_eq!(stdout(&o), "g = 13: {8, 9, 12, 13}\ng = 15: {8, 10, 13, 15}\ng = 16: {8, 11, 12, 15}\ng = 19: {8, 12, 13, 17}\n");
    assert_eq!(
        code(&wsg(&["search", "--max-genus", "10", "--format", "1,x"])),
        2
    );
}

#[test]
fn resource_limits_exit_3() {
    let o = wsg(&[
        "search",
        "--max-genus",
        "20",
        "--criterion",
        "buchweitz",
        "--max-nodes",
        "50",
        "--json",
        "--quiet",
    ]);
    assert_eq!(code(&o), 3);
    assert_eq!(json(&o)["complete"], false);
    assert_eq!(
        code(&wsg(&["enumerate", "--genus", "20", "--max-nodes", "10"])),
        3
    );
}

#[test]
fn thin_wrappers() {
    let o = wsg(&["pi0", "32", "4"]);
    assert_eq!((code(&o), stdout(&o)), (0, "145\n".to_owned()));
    let v = json(&wsg(&["pi0", "52", "13", "--json"]));
    assert_eq!(
        (v["n"].as_u64(), v["epsilon"].as_u64(), v["pi0"].as_u64()),
        (Some(4), Some(3), Some(84))
    );
    assert_eq!(code(&wsg(&["pi0", "0", "4"])), 2);

    let o = wsg(&[
        "buchweitz",
        "13",
        "14",
        "15",
        "16",
        "17",
        "18",
        "20",
        "22",
        "23",
    ]);
    assert_eq!(
        (code(&o), stdout(&o)),
        (0, "count 46 bound 45 WITNESS\n".to_owned())
    );
    let o = wsg(&["buchweitz", "2", "5"]);
    assert_eq!((code(&o), stdout(&o)), (1, "count 3 bound 3\n".to_owned()));
    assert_eq!(code(&wsg(&["buchweitz", "2", "3"])), 2);

    assert_eq!(stdout(&wsg(&["enumerate", "--genus", "0"])), "1\n");
    assert_eq!(stdout(&wsg(&["enumerate", "--genus", "7"])), "39\n");
}

#[test]
fn config_file_defaults_and_overrides() {
    let path = scratch("wsg.toml");
    std::fs::write(&path, "json = true\norder = \"x3,x1,x4,x0\"\n").unwrap();
    let p = path.to_str().unwrap();
    let v = json(&wsg(&["--config", p, "analyze", "6", "9", "13", "16"]));
    assert_eq!(
        v["ring"]["precedence"],
        serde_json::json!(["x3", "x1", "x4", "x0"])
    );
    let v = json(&wsg(&[
        "--config",
        p,
        "analyze",
        "6",
        "9",
        "13",
        "16",
        "--order",
        "x0,x1,x3,x4",
    ]));
    assert_eq!(
        v["ring"]["precedence"],
        serde_json::json!(["x0", "x1", "x3", "x4"])
    );

    std::fs::write(&path, "bogus = 1\n").unwrap();
    assert_eq!(code(&wsg(&["--config", p, "pi0", "32", "4"])), 2);
}
