use std::process::{Command, Output};

use ncskein::projection::project;
use ncskein::{NCVector, SetPartition};
use serde_json::Value;

fn ncskein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncskein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn resolve_matches_the_library() {
    let input = "1,4,8/2,3,5,7/6";
    let out = ncskein(&["resolve", input]);
    assert_eq!(out.status.code(), Some(0));
    let expected = project(&input.parse::<SetPartition>().unwrap()).unwrap();
    assert_eq!(stdout(&out), format!("{expected}\n"));
    assert_eq!(NCVector::parse(&stdout(&out), Some(8)).unwrap(), expected);
}

#[test]
fn resolve_via_and_json_agree() {
    let input = "1,4,8/2,3,5,7/6";
    let plain = json(&ncskein(&["resolve", input, "--json"]));
    let via = json(&ncskein(&["resolve", input, "--via", "5 1 2 6 3 8 4 7", "--json"]));
    assert_eq!(plain, via);
    let v = NCVector::from_json(8, &plain["terms"]).unwrap();
    assert_eq!(v, project(&input.parse::<SetPartition>().unwrap()).unwrap());
}

#[test]
fn resolve_rejects_a_bad_conjugator() {
    let out = ncskein(&["resolve", "1,3/2,4", "--via", "1 2 3 4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not noncrossing"));
}

#[test]
fn check_all_paths_passes_and_respects_max_n() {
    let out = ncskein(&["resolve", "1,3,5/2,4/6", "--check-all-paths"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: PASS"));
    let bounded = ncskein(&["resolve", "1,3,5/2,4/6", "--check-all-paths", "--max-n", "5"]);
    assert_eq!(bounded.status.code(), Some(2));
}

#[test]
fn parse_errors_point_at_the_position() {
    let out = ncskein(&["resolve", "1,4,x/2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("position 4"), "{err}");
    assert!(err.contains("  1,4,x/2\n      ^"), "{err}");
    let out = ncskein(&["act", "2 1 9", "1,2/3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ncskein(&["bogus"]).status.code(), Some(2));
    assert_eq!(ncskein(&["verify-rotation", "x"]).status.code(), Some(2));
    assert_eq!(ncskein(&["verify-rotation", "9", "--max-n", "8"]).status.code(), Some(2));
    assert_eq!(ncskein(&["qpoly", "nope", "3"]).status.code(), Some(2));
    assert_eq!(ncskein(&["verify-csp", "flag", "4", "3"]).status.code(), Some(2));
    assert_eq!(ncskein(&["--jobs", "0", "classify", "1/2"]).status.code(), Some(2));
    assert_eq!(ncskein(&["--help"]).status.code(), Some(0));
}

#[test]
fn verification_failure_exits_one() {
    let out = ncskein(&["tl-filtration", "5", "2", "--rule", "literal"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("verdict: FAIL"));
    let out = ncskein(&["tl-filtration", "5", "2"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn rotation_passes_for_every_k() {
    let out = ncskein(&["verify-rotation", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("verify-rotation n=6"));
    assert!(text.contains("c.{1,2,3}{4,5,6} = -{2,3,4}{5,6,1}"));
    assert!(text.ends_with("verdict: PASS (13 cases, 0 failed)\n"));
}

#[test]
fn flag_sieving_table() {
    let out = ncskein(&["verify-csp", "flag", "8", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"], "PASS");
    let rows = v["reports"][0]["rows"].as_array().unwrap();
    let ds: Vec<&str> = rows.iter().map(|r| r["cells"][0].as_str().unwrap()).collect();
    assert_eq!(ds, ["0", "1", "2", "3", "4", "5", "6", "7"]);
    assert_eq!(rows[0]["cells"][1], "56");
}

#[test]
fn classify_and_enumerate() {
    let v = json(&ncskein(&["classify", "1,3/2,4", "--json"]));
    assert_eq!(v["class"], "almost-noncrossing");
    assert_eq!(v["crossing_indices"], serde_json::json!([1, 2, 3]));
    let v = json(&ncskein(&["classify", "1,3/2,5/4,6", "--json"]));
    assert_eq!(v["class"], "crossing");
    assert_eq!(json(&ncskein(&["enumerate", "6", "--json"]))["count"], 132);
    assert_eq!(json(&ncskein(&["enumerate", "6", "--all", "--json"]))["count"], 203);
    assert_eq!(json(&ncskein(&["enumerate", "6", "-k", "2", "-s", "0", "--json"]))["count"], 9);
    assert_eq!(stdout(&ncskein(&["enumerate", "3", "-k", "2"])), "1,2/3\n1,3/2\n1/2,3\n");
}

#[test]
fn act_on_vectors_and_words() {
    let out = ncskein(&["act", "2 1 3", "1,2/3"]);
    assert_eq!(stdout(&out), "-1 * 1,2/3\n");
    let out = ncskein(&["act", "--word", "1 1", "+2 * 1,3/2\n-1 * 1/2/3"]);
    assert_eq!(stdout(&out), "+2 * 1,3/2\n-1 * 1/2/3\n");
    let out = ncskein(&["act", "(1,2,3)", "1,2/3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn character_table_and_matrix() {
    let v = json(&ncskein(&["character-table", "6", "2", "0", "--json"]));
    assert_eq!(v["dim"], 9);
    let shapes: Vec<&str> = v["decomposition"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["shape"].as_str().unwrap())
        .collect();
    assert_eq!(shapes, ["(2,2,1,1)"]);
    let v = json(&ncskein(&["matrix", "2 1 3 4", "4", "2", "0", "--json"]));
    assert_eq!(v["basis"], serde_json::json!(["1,2/3,4", "1,4/2,3"]));
    assert_eq!(v["matrix"], serde_json::json!([[-1, 1], [0, 1]]));
}

#[test]
fn qpoly_coefficients() {
    assert_eq!(stdout(&ncskein(&["qpoly", "binomial", "4", "2"])), "binomial(4,2) = [1, 1, 2, 1, 1]\n");
    let v = json(&ncskein(&["qpoly", "catalan", "3", "--json"]));
    assert_eq!(v["coefficients"], serde_json::json!([1, 0, 1, 1, 1, 0, 1]));
    assert_eq!(ncskein(&["qpoly", "binomial", "4"]).status.code(), Some(2));
    assert_eq!(ncskein(&["qpoly", "hook", "3,2"]).status.code(), Some(0));
}

#[test]
fn sweeps_pass_with_small_bounds() {
    for args in [
        &["verify-coxeter", "--max-n", "5"][..],
        &["verify-sigma", "--max-n", "5"],
        &["verify-reflection", "--max-n", "6"],
        &["verify-local-symmetry", "--max-n", "5", "--seed", "7", "--trials", "20"],
        &["verify-projection", "--max-n", "4"],
        &["verify-symmetrizers", "--max-n", "6"],
        &["verify-tau-tilde", "--max-n", "5"],
        &["verify-isotype", "--max-n", "5"],
        &["verify-isotype", "6", "3", "1"],
        &["verify-csp", "all", "--max-n", "6"],
        &["springer-check"],
        &["springer-check", "4,4,1"],
        &["chu-check", "--max-n", "4"],
        &["chu-check", "3", "2", "2"],
        &["tl-compare", "6", "3"],
    ] {
        let out = ncskein(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}\n{}", stdout(&out));
    }
}

#[test]
fn job_count_does_not_change_output() {
    for args in [
        &["verify-coxeter", "6"][..],
        &["verify-projection", "5", "--json"],
        &["verify-csp", "all", "--max-n", "7"],
        &["verify-local-symmetry", "5", "--seed", "3", "--trials", "40", "--json"],
        &["character-table", "7", "3"],
        &["resolve", "1,4,8/2,3,5,7/6"],
    ] {
        let one = ncskein(&[args, &["--jobs", "1"]].concat());
        let many = ncskein(&[args, &["--jobs", "4"]].concat());
        assert_eq!(one.status.code(), Some(0), "{args:?}");
        assert_eq!(one.stdout, many.stdout, "{args:?}");
    }
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&ncskein(&["verify-rotation", "4", "--json"]));
    assert!(plain["reports"][0].get("elapsed_ms").is_none());
    let timed = json(&ncskein(&["verify-rotation", "4", "--json", "--timing"]));
    assert!(timed["reports"][0]["elapsed_ms"].is_u64());
}
