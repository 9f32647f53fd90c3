use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn permgrid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permgrid"))
        .args(args)
        .env_remove("PERMGRID_CACHE")
        .output()
        .expect("binary runs")
}

fn text(args: &[&str]) -> String {
    let mut all = vec!["--format", "text"];
    all.extend_from_slice(args);
    let out = permgrid(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

fn json(args: &[&str]) -> Value {
    let out = permgrid(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn counts() {
    assert_eq!(
        text(&["count", "--basis", "4231,3124", "--to", "10", "--method", "brute"]),
        "1,2,6,22,88,363,1508,6255,25842,106327"
    );
    assert_eq!(text(&["count", "--basis", "21", "--to", "5"]), "1,1,1,1,1");
    assert_eq!(
        text(&["count", "--basis", "4213,3142", "--to", "14", "--method", "series"]),
        "1,2,6,22,89,379,1664,7460,33977,156727,730619,3436710,16291842,77758962"
    );
    let v = json(&["count", "--basis", "3142,4312", "--to", "6", "--method", "series"]);
    assert_eq!(v["counts"], serde_json::json!(["1", "2", "6", "22", "88", "367"]));
}

#[test]
fn csv_table() {
    let out = permgrid(&["--format", "csv", "count", "--basis", "123", "--to", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let t = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = t.lines().collect();
    assert!(lines[0].starts_with("n,count"));
    assert!(lines[5].starts_with("4,14,"));
}

#[test]
fn series_method_needs_a_known_class() {
    let out = permgrid(&["count", "--basis", "123", "--to", "4", "--method", "series"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn grid_commands() {
    assert_eq!(text(&["grid", "decode", "--spec", "grid_4312_3142.txt", "--word", "acadcdb"]), "2473516");
    assert_eq!(text(&["grid", "member", "--spec", "grid_fig3.txt", "--perm", "2413", "--geometric"]), "false");
    assert_eq!(text(&["grid", "member", "--spec", "grid_fig3.txt", "--perm", "2413"]), "true");
    let v = json(&["grid", "canonical", "--spec", "grid_fig3.txt", "--perm", "286435179"]);
    assert_eq!(v["cols"].as_array().unwrap().len(), 3);
}

#[test]
fn spec_files_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.txt");
    fs::write(&path, "cols: +\nrows: +\n1\n").unwrap();
    assert_eq!(text(&["grid", "decode", "--spec", path.to_str().unwrap(), "--word", "aaa"]), "123");
    fs::write(&path, "cols: + +\nrows: +\n1\n").unwrap();
    let out = permgrid(&["grid", "decode", "--spec", path.to_str().unwrap(), "--word", "a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lang_commands() {
    assert_eq!(
        text(&["lang", "gf", "--rules", "lang_grid_4231_3124.rules"]),
        "(1 - 5*x + 7*x^2 - x^3)/(1 - 6*x + 11*x^2 - 6*x^3)"
    );
    assert_eq!(text(&["lang", "count", "--rules", "all.rules", "--n", "2"]), "16");
    let v = json(&["lang", "gf-multi", "--rules", "lang_simple_4312_3142.rules", "--start", "a"]);
    assert_eq!(
        v["gf"],
        "(x_a*x_b*x_c*x_d)/(1 - x_a*x_c - x_b*x_d - x_c*x_d - x_a*x_c*x_d - x_b*x_c*x_d)"
    );
    let words = text(&["lang", "words", "--rules", "lang_simple_4213_3142.rules", "--n", "6"]);
    assert_eq!(words, "bababa");
    let out = permgrid(&["lang", "words", "--rules", "all.rules", "--n", "6", "--bound", "100"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_rules_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.rules");
    fs::write(&path, "alphabet: a,b\nfactor {a,\n").unwrap();
    let out = permgrid(&["lang", "gf", "--rules", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn series_commands() {
    assert_eq!(text(&["series", "roots", "--discriminant-of", "4312,3142"]), "1/5");
    let r: f64 = text(&["series", "roots", "--poly=-1,5,-4,1"]).parse().unwrap();
    assert!((r - 0.2451).abs() < 5e-4);
    assert_eq!(
        text(&["series", "solve", "--poly", "0,1;-1,2;0,1", "--seed", "0", "--order", "8"]),
        "0,1,2,5,14,42,132,429"
    );
    assert_eq!(text(&["series", "verify", "--class", "4213,3142", "--to", "9"]), "true");
    let out = permgrid(&["series", "verify", "--poly", "0,1;-1,2;0,1", "--terms", "0,1,2,5,15", "--to", "4"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_exit_codes() {
    let v = json(&["verify", "--suite", "prop1", "--to", "4"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), 2);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));

    let out = permgrid(&["verify", "--suite", "all", "--to", "8", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));

    let out = permgrid(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = permgrid(&["verify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_reproducible_apart_from_timing() {
    let strip = |mut v: Value| {
        v["elapsed_ms"] = Value::Null;
        v
    };
    let a = strip(json(&["verify", "--suite", "thm-4231-3124", "--to", "8"]));
    let b = strip(json(&["verify", "--suite", "thm-4231-3124", "--to", "8"]));
    assert_eq!(a, b);
    assert_eq!(a["suite"], "thm-4231-3124");
}

#[test]
fn report_to_file_and_cache_dir() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let cache = dir.path().join("cache");
    let out = Command::new(env!("CARGO_BIN_EXE_permgrid"))
        .args(["verify", "--suite", "thm-4312-3142", "--to", "7", "--out", report.to_str().unwrap()])
        .env("PERMGRID_CACHE", &cache)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("permgrid.conf");
    fs::write(&cfg, "geom_bound = 3\n").unwrap();
    let c = cfg.to_str().unwrap();
    let out = permgrid(&["--config", c, "grid", "member", "--spec", "grid_fig3.txt", "--perm", "2413", "--geometric"]);
    assert_eq!(out.status.code(), Some(2), "bound from the config applies");
    let out = permgrid(&[
        "--config", c, "grid", "member", "--spec", "grid_fig3.txt", "--perm", "2413", "--geometric", "--bound", "9",
    ]);
    assert_eq!(out.status.code(), Some(0), "flags override the config");
    fs::write(&cfg, "colour = blue\n").unwrap();
    assert_eq!(permgrid(&["--config", c, "count", "--basis", "1", "--to", "1"]).status.code(), Some(2));
}
