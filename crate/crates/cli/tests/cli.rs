use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loglin"))
        .args(args)
        .output()
        .expect("failed to run loglin")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    stdout(&out)
}

fn ok_json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--output", "json"]);
    serde_json::from_str(&ok(&full)).expect("stdout is JSON")
}

/// `key: value` lines of the text renderer.
fn field(text: &str, key: &str) -> String {
    let prefix = format!("{key}: ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no {key} in\n{text}"))
        .to_string()
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

const PATH: &str = "[[1,2],[1,4],[2,3]]";

#[test]
fn info_cyclic_5() {
    let text = ok(&["info", "--family", "cyclic", "--m", "5"]);
    assert_eq!(field(&text, "f_vector"), "(1, 5, 5)");
    assert_eq!(field(&text, "e_vector"), "(1, -5, 5)");
    assert_eq!(field(&text, "dehn_sommerville"), "true");
}

#[test]
fn info_path_json() {
    let v = ok_json(&["info", "--facets", PATH, "--m", "4"]);
    assert_eq!(ints(&v["f_vector"]), [1, 4, 3]);
    assert_eq!(ints(&v["e_vector"]), [0, -2, 3]);
    assert_eq!(v["dehn_sommerville"], Value::Bool(false));
    assert_eq!(v["minimal_nonfaces"], serde_json::json!([[1, 3], [2, 4], [3, 4]]));
}

#[test]
fn info_saturated_3() {
    let v = ok_json(&["info", "--family", "saturated", "--m", "3"]);
    assert_eq!(ints(&v["e_vector"]), [0, 0, 0, 1]);
    assert_eq!(v["dehn_sommerville"], Value::Bool(false));
}

#[test]
fn info_json_round_trips() {
    let v = ok_json(&["info", "--facets", "[[4,1],[3,2],[2,1]]", "--m", "4"]);
    let again = serde_json::json!({"m": v["m"], "facets": v["facets"]}).to_string();
    let w = ok_json(&["info", "--spec", &again]);
    assert_eq!(v, w);
    assert_eq!(v["facets"], serde_json::json!([[1, 2], [1, 4], [2, 3]]));
}

#[test]
fn rank_saturated() {
    let text = ok(&["rank", "--family", "saturated", "--m", "3", "--r", "2"]);
    assert_eq!(field(&text, "rank"), "8");
    assert_eq!(field(&text, "degrees_of_freedom"), "0");
}

#[test]
fn rank_path_verified() {
    let v = ok_json(&["rank", "--facets", PATH, "--m", "4", "--r", "2", "--verify"]);
    assert_eq!(v["rank"], 8);
    assert_eq!(v["oracle_rank"], 8);
    assert_eq!(v["oracle_checked"], true);
    assert_eq!(v["oracle_agrees"], true);
}

#[test]
fn rank_main_effect_mixed_levels() {
    let v = ok_json(&["rank", "--family", "main-effect", "--m", "3", "--levels", "2,3,4"]);
    assert_eq!(v["rank"], 7);
    assert_eq!(v["degrees_of_freedom"], 17);
    assert_eq!(v["cross_checks"], serde_json::json!([]));
}

#[test]
fn text_and_json_agree() {
    let cases: [&[&str]; 4] = [
        &["rank", "--family", "cyclic", "--m", "6", "--r", "3", "--verify"],
        &["rank", "--facets", PATH, "--m", "4", "--levels", "2,3,2,5", "--verify"],
        &["rank", "--family", "simplex-boundary", "--m", "4", "--r", "2"],
        &["rank", "--family", "saturated", "--m", "2", "--r", "7"],
    ];
    for args in cases {
        let text = ok(args);
        let v = ok_json(args);
        for key in ["rank", "model_dimension", "degrees_of_freedom", "joint_cells"] {
            assert_eq!(field(&text, key), v[key].to_string(), "{key} for {args:?}");
        }
        assert_eq!(field(&text, "dehn_sommerville"), v["dehn_sommerville"].to_string());
        if let Some(o) = v["oracle_rank"].as_i64() {
            assert_eq!(field(&text, "oracle_rank"), format!("{o} (agrees)"));
        }
    }
}

#[test]
fn huge_ranks_are_strings_in_json() {
    // 40^12 joint cells is far above 2^53.
    let v = ok_json(&["rank", "--family", "saturated", "--m", "12", "--r", "40"]);
    assert_eq!(v["rank"], Value::String("16777216000000000000".into()));
    assert_eq!(v["degrees_of_freedom"], 0);
    let text = ok(&["rank", "--family", "saturated", "--m", "12", "--r", "40"]);
    assert_eq!(field(&text, "rank"), "16777216000000000000");
}

#[test]
fn verify_over_cap_warns_and_succeeds() {
    let out = run(&["rank", "--family", "cyclic", "--m", "5", "--r", "4", "--verify", "--size-cap", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap"));
    assert_eq!(field(&stdout(&out), "rank"), (1 - 20 + 80).to_string());
}

#[test]
fn sweep_m3_levels_2_3() {
    let v = ok_json(&["verify-sweep", "--max-m", "3", "--levels", "2,3"]);
    let row = &v["rows"][2];
    assert_eq!(row["m"], 3);
    assert_eq!(row["complexes"], 9);
    assert_eq!(row["cases"], 72);
    assert_eq!(row["checked"], 72);
    assert_eq!(row["disagreements"], 0);
    assert_eq!(v["total"]["disagreements"], 0);
    assert_eq!(v["problems"], serde_json::json!([]));
}

#[test]
fn sweep_small_cases() {
    let v = ok_json(&["verify-sweep", "--max-m", "2", "--levels", "2"]);
    assert_eq!(v["rows"][1]["complexes"], 2);
    assert_eq!(v["rows"][1]["disagreements"], 0);

    let v = ok_json(&["verify-sweep", "--max-m", "1", "--levels", "1"]);
    assert_eq!(v["total"]["cases"], 1);
    assert_eq!(v["total"]["rank_min"], 1);
    assert_eq!(v["total"]["rank_max"], 1);
}

#[test]
fn sweep_random_is_seeded() {
    let args = ["verify-sweep", "--max-m", "1", "--levels", "1,2,3", "--random", "20", "--random-m", "4,5", "--seed", "7"];
    let a = ok(&args);
    assert_eq!(a, ok(&args));
    let v = ok_json(&args);
    assert_eq!(v["rows"][1]["group"], "random m=4");
    assert_eq!(v["rows"][2]["cases"], 20);
    assert_eq!(v["total"]["disagreements"], 0);
}

#[test]
fn sweep_text_matches_json_totals() {
    let args = ["verify-sweep", "--max-m", "3", "--levels", "1,2"];
    let text = ok(&args);
    let v = ok_json(&args);
    let total: Vec<&str> = text.lines().find(|l| l.starts_with("total")).unwrap().split_whitespace().collect();
    assert_eq!(total[1], v["total"]["complexes"].to_string());
    assert_eq!(total[2], v["total"]["cases"].to_string());
    assert_eq!(total[5], v["total"]["disagreements"].to_string());
}

#[test]
fn sweep_guard() {
    assert_eq!(run(&["verify-sweep", "--max-m", "5"]).status.code(), Some(2));
}

#[test]
fn dump_matrix_golden() {
    let got = ok(&["dump-matrix", "--family", "main-effect", "--m", "2", "--r", "2"]);
    let want = std::fs::read_to_string(golden("main_effect_2x2.txt")).unwrap();
    assert_eq!(got, want);
}

#[test]
fn dump_matrix_from_file() {
    let path = golden("path_model.json");
    let got = ok(&["dump-matrix", "--input", path.to_str().unwrap()]);
    let mut lines = got.lines();
    assert_eq!(lines.next(), Some("12 16"));
    assert_eq!(lines.count(), 12);
}

#[test]
fn input_from_stdin_and_flag_override() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_loglin"))
        .args(["rank", "--input", "-", "--r", "3", "--output", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"m": 4, "facets": [[1,2],[1,4],[2,3]], "levels": [2,2,2,2]}"#)
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    // --r 3 wins over the file levels: 1 + 4*2 + 3*4 = 21.
    assert_eq!(v["rank"], 21);
    assert_eq!(ints(&v["levels"]), [3, 3, 3, 3]);
}

#[test]
fn levels_from_file() {
    let path = golden("path_model.json");
    let v = ok_json(&["rank", "--input", path.to_str().unwrap()]);
    assert_eq!(v["rank"], 8);
}

#[test]
fn evector_conversions() {
    let v = ok_json(&["evector", "--e-vector", "1,-5,5", "--r", "2"]);
    assert_eq!(ints(&v["f_vector"]), [1, 5, 5]);
    assert_eq!(v["value_at_r"], 11);
    assert_eq!(v["dehn_sommerville"], true);

    let v = ok_json(&["evector", "--f-vector", "1,4,3"]);
    assert_eq!(ints(&v["e_vector"]), [0, -2, 3]);

    let out = run(&["evector", "--e-vector", "0,-3,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn evector_series_check() {
    let v = ok_json(&["evector", "--family", "cyclic", "--m", "4", "--x", "0.3,-0.2,0.1,0.5", "--degree", "25"]);
    assert_eq!(v["series"]["within_tolerance"], true);
    assert!(v["series"]["abs_diff"].as_f64().unwrap() <= 1e-9);

    // Degree 1 keeps only the linear terms, far from the closed form.
    let out = run(&["evector", "--family", "cyclic", "--m", "4", "--x", "0.3,-0.2,0.1,0.5", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_2_with_diagnostics() {
    let cases: [(&[&str], &str); 6] = [
        (&["info", "--spec", "{\"m\": 3,\n \"facets\": [[1,2],]}"], "line 2"),
        (&["info", "--spec", r#"{"m": 3, "facet": [[1,2]]}"#], "unknown field `facet`"),
        (&["info", "--facets", "[[1,2]]", "--m", "3"], "vertex 3"),
        (&["info", "--facets", "[[1,5]]", "--m", "3"], "outside 1..=3"),
        (&["info", "--family", "cyclic", "--m", "3", "--facets", "[[1]]"], "exactly one"),
        (&["rank", "--family", "cyclic", "--m", "3", "--levels", "2,2"], "expected 3 level counts"),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn dump_over_cap_is_an_error() {
    let out = run(&["dump-matrix", "--family", "saturated", "--m", "3", "--r", "10", "--size-cap", "999"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size cap"));
}
