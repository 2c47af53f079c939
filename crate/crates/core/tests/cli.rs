use std::process::{Command, Output};

use serde_json::Value;

const STANDARD: [&str; 4] = ["--beta0", "3/4", "--beta1", "2/3"];
const NARROW: [&str; 4] = ["--beta0", "11/20", "--beta1", "51/100"];

fn run(bases: &[&str], args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nonuniform"))
        .args(bases)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(bases: &[&str], args: &[&str]) -> String {
    let out = run(bases, args);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(bases: &[&str], args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(bases, &full)).unwrap()
}

fn code(bases: &[&str], args: &[&str]) -> i32 {
    run(bases, args).status.code().unwrap()
}

#[test]
fn expand_greedy() {
    let v = json(&STANDARD, &["expand", "--x", "1", "--algorithm", "greedy", "--depth", "5"]);
    assert_eq!(v["digits"], "10100");
    assert_eq!(v["residual"], "0/1");
    assert_eq!(v["in_cylinder"], true);
    assert_eq!(v["orbit"][2], "2/3");
}

#[test]
fn expand_lazy_at_zero() {
    let v = json(&STANDARD, &["expand", "--x", "0", "--algorithm", "lazy", "--depth", "4"]);
    assert_eq!(v["digits"], "0000");
}

#[test]
fn expand_intermediate_takes_one_at_threshold() {
    let v = json(&STANDARD, &["expand", "--x", "1", "--algorithm", "intermediate", "--alpha", "1", "--depth", "3"]);
    assert!(v["digits"].as_str().unwrap().starts_with('1'));
    assert_eq!(v["alpha"], "1/1");
}

#[test]
fn expand_text_mentions_digits() {
    let text = stdout(&STANDARD, &["expand", "--x", "1", "--depth", "5"]);
    assert!(text.contains("digits: 10100"));
}

#[test]
fn enumerate_counts_and_lists() {
    let v = json(&STANDARD, &["enumerate", "--x", "1", "--depth", "2"]);
    assert_eq!(v["count"], 3);
    let prefixes = v["prefixes"].as_array().unwrap();
    let digits: Vec<&Value> = prefixes.iter().map(|p| &p["digits"]).collect();
    assert_eq!(digits, [&serde_json::json!([0, 0]), &serde_json::json!([0, 1]), &serde_json::json!([1, 0])]);
    assert!(prefixes.iter().all(|p| p["pullback"].as_str().unwrap().contains('/')));
}

#[test]
fn enumerate_zero_has_one_expansion() {
    for depth in ["1", "8", "30"] {
        let v = json(&STANDARD, &["enumerate", "--x", "0", "--depth", depth, "--count-only"]);
        assert_eq!(v["count"], 1);
        assert!(v.get("prefixes").is_none());
    }
}

#[test]
fn enumerate_csv_has_one_row_per_prefix() {
    let text = stdout(&STANDARD, &["--format", "csv", "enumerate", "--x", "1", "--depth", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("digits,pullback"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn enumerate_depth_caps() {
    assert_eq!(code(&STANDARD, &["enumerate", "--x", "1", "--depth", "17"]), 2);
    assert_eq!(code(&STANDARD, &["enumerate", "--x", "1", "--depth", "41", "--count-only"]), 2);
    assert_eq!(code(&STANDARD, &["enumerate", "--x", "0", "--depth", "17", "--max-depth", "17"]), 0);
}

#[test]
fn unique_verdicts() {
    let v = json(&NARROW, &["unique", "--sequence", "(01)"]);
    assert_eq!(v["verdict"], true);
    let v = json(&STANDARD, &["unique", "--sequence", "(0)"]);
    assert_eq!(v["verdict"], true);
    let v = json(&STANDARD, &["unique", "--sequence", "(01)"]);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness_shift"], 0);
    assert_eq!(v["shifted_values"][0]["value"], "1/1");
}

#[test]
fn unique_family_needs_its_regime() {
    let v = json(&NARROW, &["unique", "--zeros", "3"]);
    assert_eq!(v["sequence"], "000(01)");
    assert_eq!(v["verdict"], true);
    assert_eq!(code(&STANDARD, &["unique", "--zeros", "3"]), 2);
}

#[test]
fn regime_truth_values() {
    let v = json(&STANDARD, &["regime"]);
    assert_eq!(v["continuum_all"], true);
    assert_eq!(v["countable_unique"], false);
    assert_eq!(v["uncountable_unique"], false);
    assert_eq!(v["continuum_quantity"], "43/36");
    let v = json(&NARROW, &["regime"]);
    assert_eq!(v["continuum_all"], false);
    assert_eq!(v["countable_unique"], true);
    assert_eq!(v["uncountable_unique"], true);
    assert_eq!(v["countable_quantity"], "1661/2000");
}

#[test]
fn lambda_agrees_with_recursion() {
    let text = stdout(&STANDARD, &["lambda", "--n", "5"]);
    assert!(text.contains("recursion == closed form: true"));
    assert!(text.contains("lambda_1 = (1/2, 5/3)"));
}

#[test]
fn lambda_outside_regime_is_a_domain_error() {
    let out = run(&NARROW, &["lambda", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("beta1^2 + beta0 > 1"));
}

#[test]
fn dimension_formula_and_estimate() {
    let v = json(&NARROW, &["dimension", "--depth", "20"]);
    let approx = &v["approx"];
    let formula = approx["dimension"].as_f64().unwrap();
    let estimate = approx["box_count_estimate"].as_f64().unwrap();
    assert!((formula - 0.5452).abs() < 5e-4);
    assert!((estimate - formula).abs() < 0.02);
    assert_eq!(v["exact"]["ratio"], "561/2000");
    assert_eq!(v["exact"]["separated_to_depth"], 14);
}

#[test]
fn survey_is_seeded() {
    let args = ["--seed", "7", "survey", "--samples", "12", "--depth", "12"];
    let first = stdout(&STANDARD, &args);
    assert_eq!(first, stdout(&STANDARD, &args));
    let other = stdout(&STANDARD, &["--seed", "8", "survey", "--samples", "12", "--depth", "12"]);
    assert_ne!(first, other);
}

#[test]
fn enumerate_output_ignores_thread_count() {
    let args = ["--format", "json", "enumerate", "--x", "9/10", "--depth", "12"];
    let base = stdout(&STANDARD, &args);
    for threads in ["1", "3", "8"] {
        let mut with = vec!["--threads", threads];
        with.extend_from_slice(&args);
        assert_eq!(stdout(&STANDARD, &with), base);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&STANDARD, &["--help"]), 0);
    assert_eq!(code(&STANDARD, &["expand", "--x", "1"]), 0);
    assert_eq!(code(&STANDARD, &["expand", "--x", "1/0"]), 1);
    assert_eq!(code(&STANDARD, &["expand", "--x", "abc"]), 1);
    assert_eq!(code(&STANDARD, &["bogus"]), 1);
    assert_eq!(code(&[], &["regime"]), 1);
    assert_eq!(code(&STANDARD, &["expand", "--x", "5"]), 2);
    assert_eq!(code(&STANDARD, &["expand", "--x", "1", "--algorithm", "intermediate", "--alpha", "2/3"]), 2);
    assert_eq!(code(&STANDARD, &["expand", "--x", "1", "--algorithm", "intermediate"]), 1);
}

#[test]
fn invalid_bases_name_the_constraint() {
    let out = run(&["--beta0", "2/3", "--beta1", "3/4"], &["regime"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1/2 < beta1 <= beta0 < 1"));
}
