use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use wreathcoh::json::{from_json, to_json_pretty};
use wreathcoh::rational::rat;
use wreathcoh::{CoeffPoly, Generator, Monomial};

fn wreathcoh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathcoh"))
        .args(args)
        .env_remove("WREATHCOH_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wreathcoh(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn with_cache(dir: &Path, args: &[&str]) -> String {
    let mut full = args.to_vec();
    full.extend(["--cache-dir", dir.to_str().unwrap()]);
    stdout(&full)
}

#[test]
fn golden_outputs() {
    assert_eq!(stdout(&["betti", "--r", "2", "--n", "3", "--space", "closed"]), "1 8 1\n");
    assert_eq!(stdout(&["trace", "--r", "2", "--n", "3", "--class", "3:0^1", "--space", "closed"]), "q^2+2q+1\n");
    assert_eq!(stdout(&["decompose", "--r", "1", "--n", "3", "--space", "closed", "--degree", "3"]), "(3): q+1\n");
    assert_eq!(
        stdout(&["series", "--r", "2", "--space", "open-affine", "--max-degree", "1"]),
        "1 + (q-1)/2*x_1 + (q-1)/2*y_1\n"
    );
    assert_eq!(stdout(&["trees", "--r", "2", "--n", "3"]), "47\n");
    assert_eq!(stdout(&["betti", "--r", "1", "--n", "5"]), "1 16 16 1\n");
}

#[test]
fn closed_rank_two_series_text() {
    let text = stdout(&["series", "--r", "2", "--space", "closed", "--max-degree", "3"]);
    for term in ["(q^2+8q+1)/48*x_1^3", "(q^2+4q+1)/8*x_1*x_2", "(q^2+2q+1)/6*y_3", "(q+1)/4*x_1*y_1"] {
        assert!(text.contains(term), "{term} missing from {text}");
    }
}

#[test]
fn closed_rank_one_json() {
    let json = stdout(&["series", "--r", "1", "--space", "closed", "--max-degree", "3", "--format", "json"]);
    let series = from_json(&json).unwrap();
    let p = |i| (Generator::new(i, 0), 1);
    let q_plus_1 = CoeffPoly::from_ints(&[1, 1]);
    for (mono, scale) in [
        (Monomial::power(Generator::new(1, 0), 3), rat(1, 6)),
        (Monomial::from_factors([p(1), p(2)]), rat(1, 2)),
        (Monomial::from_factors([p(3)]), rat(1, 3)),
    ] {
        assert_eq!(series.coeff_of(&mono), q_plus_1.scale(&scale));
    }
    assert_eq!(series.homogeneous(3).len(), 3);
    assert_eq!(to_json_pretty(&series) + "\n", json);
}

#[test]
fn cache_hits_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["series", "--r", "2", "--space", "closed", "--max-degree", "4", "--format", "json"];
    let cold = stdout(&args);
    let first = with_cache(dir.path(), &args);
    let entries: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(entries.len(), 1);
    let name = entries[0].to_str().unwrap().to_string();
    assert!(name.starts_with("closed-r2-n4-v"), "{name}");
    let warm = with_cache(dir.path(), &args);
    assert_eq!(cold, first);
    assert_eq!(cold, warm);

    // the text rendering and dependent commands read the same entry
    let text = stdout(&["series", "--r", "2", "--space", "closed", "--max-degree", "4"]);
    assert_eq!(with_cache(dir.path(), &["series", "--r", "2", "--space", "closed", "--max-degree", "4"]), text);
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_wreathcoh"))
        .args(["betti", "--r", "2", "--n", "3"])
        .env("WREATHCOH_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1 8 1\n");
    assert!(dir.path().join(format!("closed-r2-n3-v{}.json", wreathcoh::ENGINE_VERSION)).exists());
}

#[test]
fn damaged_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["betti", "--r", "2", "--n", "3", "--space", "closed"];
    with_cache(dir.path(), &args);
    let entry = dir.path().join(format!("closed-r2-n3-v{}.json", wreathcoh::ENGINE_VERSION));
    fs::write(&entry, "{ not json").unwrap();
    assert_eq!(with_cache(dir.path(), &args), "1 8 1\n");
    // a different series stored under the key is not trusted either
    fs::write(&entry, stdout(&["series", "--r", "2", "--max-degree", "2", "--format", "json"])).unwrap();
    assert_eq!(with_cache(dir.path(), &args), "1 8 1\n");
    assert!(from_json(&fs::read_to_string(&entry).unwrap()).unwrap().truncation() == 3);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| wreathcoh(args).status.code();
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["betti", "--r", "2"]), Some(1));
    assert_eq!(code(&["betti", "--r", "2", "--n", "3", "--space", "open"]), Some(1));
    assert_eq!(code(&["trace", "--r", "2", "--class", "3:7^1"]), Some(1));
    assert_eq!(code(&["trace", "--r", "2", "--n", "2", "--class", "3:0^1"]), Some(1));
    assert_eq!(code(&["decompose", "--r", "1", "--n", "3", "--degree", "2"]), Some(1));
    assert_eq!(code(&["betti", "--r", "1", "--n", "0"]), Some(1));
    assert_eq!(code(&["verify", "--suite", "trees", "--max-degree", "3"]), Some(0));
}

#[test]
fn errors_are_reported_distinctly() {
    let stderr = |args: &[&str]| String::from_utf8(wreathcoh(args).stderr).unwrap();
    assert!(stderr(&["trees", "--r", "2", "--n", "9"]).contains("size guard"));
    assert!(stderr(&["trace", "--r", "2", "--class", "3:0^x"]).contains("parse error"));
}

#[test]
fn tree_output() {
    let out = stdout(&["trees", "--r", "1", "--n", "3", "--cycle-index", "--render"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("4"));
    assert_eq!(lines.next(), Some("p_1*p_2 + 2/3*p_1^3 + 1/3*p_3"));
    assert_eq!(out.matches("\n*\n").count(), 4);
    let json = stdout(&["trees", "--r", "2", "--n", "1", "--cycle-index", "--format", "json"]);
    let z = from_json(json.lines().nth(1).unwrap()).unwrap();
    assert_eq!(
        z.coeff_of(&Monomial::from_factors([(Generator::new(1, 1), 1)])),
        CoeffPoly::from_ints(&[1]).scale(&rat(1, 2))
    );
}

#[test]
fn verify_reports_each_check() {
    let out = stdout(&["verify", "--suite", "wreath", "--max-degree", "3", "--cases", "5"]);
    assert!(out.lines().all(|l| l.starts_with("PASS wreath/")), "{out}");
    assert_eq!(out.lines().count(), 2);
}
