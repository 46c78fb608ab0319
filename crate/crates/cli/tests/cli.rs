use std::process::{Command, Output};

fn pwords(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pwords")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().to_string()).collect()
}

#[test]
fn families_listing() {
    let out = pwords(&["families"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().find(|l| l.starts_with("paper-example")).unwrap();
    assert!(line.contains("hole-function example"));

    let out = pwords(&["families", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["catalog"].as_array().unwrap().len(), 8);
    assert!(v["presets"].as_array().unwrap().iter().any(|p| p["name"] == "b-at-squares"));
}

#[test]
fn unknown_subcommand_is_a_usage_error() {
    let out = pwords(&["frobnicate"]);
    assert!(!out.status.success());
    assert!(stderr(&out).contains("Usage"));
}

#[test]
fn profile_hole_then_a() {
    let out = pwords(&["profile", "--family", "hole-then-a", "--n-max", "6", "--horizon", "256"]);
    assert!(out.status.success());
    let csv = stdout(&out);
    assert_eq!(csv.lines().next().unwrap(), "n,p,r,d,R,stable");
    assert_eq!(column(&csv, "p"), vec!["2"; 6]);
    assert_eq!(column(&csv, "r"), vec!["1"; 6]);
    assert_eq!(column(&csv, "d"), vec!["1"; 6]);
    assert_eq!(column(&csv, "R"), vec![""; 6]);
}

#[test]
fn profile_trivial_holes_and_squares() {
    let out = pwords(&["profile", "--family", "trivial-holes", "--n-max", "4", "--horizon", "64"]);
    assert_eq!(column(&stdout(&out), "p"), ["2", "4", "8", "16"]);

    let out = pwords(&["profile", "--family", "b-at-squares", "--n-max", "8", "--horizon", "4096"]);
    let expected: Vec<String> = (2..=9).map(|n: usize| n.to_string()).collect();
    assert_eq!(column(&stdout(&out), "r"), expected);
}

#[test]
fn profile_json_carries_horizon_and_stability() {
    let out = pwords(&["profile", "--family", "thue-morse", "--n-max", "4", "--horizon", "256", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["horizon"], 512);
    assert_eq!(v["rows"][2]["p"], 6);
    assert_eq!(v["rows"][2]["stable"], true);
}

#[test]
fn unstable_rows_need_a_flag() {
    let out = pwords(&["profile", "--family", "thue-morse", "--n-max", "20", "--horizon", "64"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error[PW006]"), "{err}");
    assert_eq!(err.lines().count(), 1);

    let out = pwords(&["profile", "--family", "thue-morse", "--n-max", "20", "--horizon", "64", "--allow-unstable"]);
    assert!(out.status.success());
    assert!(stderr(&out).contains("warning"));
    assert!(column(&stdout(&out), "stable").contains(&"false".to_string()));
}

#[test]
fn recurrence_witness() {
    let out = pwords(&["recurrence", "--family", "hole-then-a", "--n", "1", "--horizon", "32"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["status"], "single-occurrence-found");
    assert_eq!(v["witnesses"][0]["word"], "b");
    assert_eq!(v["witnesses"][0]["position"], 0);
}

#[test]
fn rfunction_thue_morse() {
    let out = pwords(&["rfunction", "--family", "thue-morse", "--n-max", "4", "--horizon", "2048"]);
    assert_eq!(column(&stdout(&out), "R"), ["3", "9", "11", "21"]);
}

#[test]
fn greedy_completion_ledger() {
    let out = pwords(&["complete", "--family", "trivial-holes", "--strategy", "greedy", "--n-max", "3", "--horizon", "64"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let fills = v["fills"].as_array().unwrap();
    assert_eq!(fills.len(), 64);
    assert_eq!(fills[0]["reason"]["kind"], "subword-embed");
    assert_eq!(v["completed"].as_str().unwrap().len(), 64);
}

#[test]
fn greedy_completion_error_has_context() {
    let out = pwords(&["complete", "--family", "hole-then-a", "--strategy", "greedy", "--n-max", "1", "--horizon", "8"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.starts_with("error[PW007]") && err.contains("hole-then-a") && err.contains("L = 8"), "{err}");
}

#[test]
fn exhaustive_and_most_complex() {
    let out = pwords(&["complete", "--family", "ultimately-periodic::a*", "--strategy", "exhaustive", "--n-max", "2", "--horizon", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["completions"].as_array().unwrap().len(), 16);

    let out = pwords(&["dominance", "--family", "hole-then-a", "--n-max", "3", "--horizon", "16"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dominant"], format!("b{}", "a".repeat(15)));

    let out = pwords(&["complete", "--family", "trivial-holes", "--strategy", "exhaustive", "--n-max", "2", "--horizon", "64"]);
    assert!(stderr(&out).starts_with("error[PW004]"));
}

#[test]
fn verify_all_on_hole_function_example() {
    let out = pwords(&["verify", "all", "--family", "paper-example", "--horizon", "4096"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 11);
    assert!(reports.iter().all(|r| r["verdict"] != "FAIL"));
    assert_eq!(reports[0]["predicate"], "ferenczi");
}

#[test]
fn verify_single_predicate_and_unknown() {
    let out = pwords(&["verify", "theta-equivalence", "--family", "hole-then-a", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "family,predicate,verdict\nhole-then-a,theta-equivalence,PASS\n");

    let out = pwords(&["verify", "nonsense", "--family", "hole-then-a"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_byte_identical() {
    let args = ["verify", "all", "--family", "exp-holes:3", "--seed", "7"];
    assert_eq!(pwords(&args).stdout, pwords(&args).stdout);
    let args = ["complete", "--family", "b-at-squares", "--strategy", "greedy", "--n-max", "2", "--horizon", "512"];
    assert_eq!(pwords(&args).stdout, pwords(&args).stdout);
}

#[test]
fn spec_file_matches_preset() {
    let dir = std::env::temp_dir().join(format!("pwords-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("squares.json");
    std::fs::write(
        &path,
        r#"{"name": "squares-file", "alphabet": "ab", "base": {"kind": "constant", "letter": "a"}, "holes": {"kind": "squares"}}"#,
    )
    .unwrap();
    let from_file = pwords(&["profile", "--spec-file", path.to_str().unwrap(), "--n-max", "6", "--horizon", "512"]);
    let preset = pwords(&["profile", "--family", "holes-at-squares", "--n-max", "6", "--horizon", "512"]);
    assert!(from_file.status.success(), "{}", stderr(&from_file));
    assert_eq!(from_file.stdout, preset.stdout);

    let out_path = dir.join("profile.csv");
    let out = pwords(&["profile", "--family", "hole-then-a", "--n-max", "2", "--horizon", "64", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    assert!(std::fs::read_to_string(&out_path).unwrap().starts_with("n,p,r,d,R,stable"));

    std::fs::write(&path, r#"{"alphabet": "ab", "base": {"kind": "nope"}}"#).unwrap();
    let bad = pwords(&["profile", "--spec-file", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stderr(&bad).starts_with("error[PW"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn oracle_diff_reports_equality() {
    let out = pwords(&["oracle-diff", "--family", "paper-example", "--n-max", "8", "--horizon", "128", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["equal"], true);
}
