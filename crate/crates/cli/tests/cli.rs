use std::path::{Path, PathBuf};
use std::process::Command as Process;

use serde_json::{json, Value};
use tempfile::TempDir;

use logbundle_cli::{run, Command, JobSpec};

const TWO_CONICS: &str = r#"{"n": 2, "hypersurfaces": [
  {"degree": 2, "terms": [{"exp": [2,0,0], "coeff": "1"}, {"exp": [0,2,0], "coeff": "2"}, {"exp": [0,0,2], "coeff": "-1"}]},
  {"degree": 2, "terms": [{"exp": [2,0,0], "coeff": "3"}, {"exp": [0,2,0], "coeff": "5"}, {"exp": [0,0,2], "coeff": "-1"}]}]}"#;

const DIAGONAL_PAIR: &str = r#"{"n": 2, "A": [[1,0,0],[0,2,0],[0,0,-1]], "B": [[3,0,0],[0,5,0],[0,0,-1]]}"#;

const IRRATIONAL_PAIR: &str = r#"{"n": 2, "A": [[2,0,0],[0,1,0],[0,0,1]], "B": [[0,1,0],[1,0,0],[0,0,2]]}"#;

fn two_pairs(second_a: &str) -> String {
    format!(r#"{{"first": {DIAGONAL_PAIR}, "second": {{"n": 2, "A": {second_a}, "B": [[3,0,0],[0,5,0],[0,0,-1]]}}}}"#)
}

fn file(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn report(command: Command, input: &Path) -> Value {
    let out = run(&JobSpec::new(command, input)).unwrap();
    assert_eq!(out.status, 0);
    out.report
}

fn binary(args: &[&str]) -> (i32, Value) {
    let out = Process::new(env!("CARGO_BIN_EXE_logbundle")).args(args).output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), value)
}

#[test]
fn chern_of_two_conics() {
    let dir = TempDir::new().unwrap();
    let r = report(Command::Chern, &file(&dir, "c.json", TWO_CONICS));
    assert_eq!(r["command"], "chern");
    assert_eq!(r["rank"], 2);
    assert_eq!(r["chern"], json!([1, 3]));
    assert_eq!(r["second_path_agrees"], true);
}

#[test]
fn zeroes_of_the_diagonal_pair() {
    let dir = TempDir::new().unwrap();
    let r = report(Command::Zeroes, &file(&dir, "p.json", DIAGONAL_PAIR));
    assert_eq!(r["singular_points"], json!([["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]));
    let lambdas: Vec<&str> =
        r["eigenvalues"].as_array().unwrap().iter().map(|e| e["lambda"].as_str().unwrap()).collect();
    assert_eq!(lambdas, ["1/3", "2/5", "1"]);
    assert_eq!(r["normal_crossings"], true);
}

#[test]
fn algebraic_roots_exit_two() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "irr.json", IRRATIONAL_PAIR);
    let (code, r) = binary(&["zeroes", "--input", input.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(r["outcome"], "needs_algebraic_roots");
    assert_eq!(r["factors"], json!([["-2", "0", "1"]]));
}

#[test]
fn torelli_negative_and_positive() {
    let dir = TempDir::new().unwrap();
    let neg = report(Command::TorelliPair, &file(&dir, "neg.json", &two_pairs("[[1,0,0],[0,3,0],[0,0,-1]]")));
    assert_eq!(neg["dual_pencil_equal"], false);
    assert_eq!(neg["witness"], Value::Null);
    assert_eq!(neg["iso_conditions"]["verdict"], "not_isomorphic");

    let pos =
        report(Command::TorelliPair, &file(&dir, "pos.json", &two_pairs(r#"[["3/2",0,0],[0,"20/7",0],[0,0,-1]]"#)));
    assert_eq!(pos["dual_pencil_equal"], true);
    assert_eq!(pos["witness"]["verified"], true);
    assert_eq!(pos["iso_conditions"]["verdict"], "isomorphic");
    assert_eq!(pos["normal_crossings"], json!([true, true]));
}

#[test]
fn canonical_echo_reruns_to_the_same_report() {
    let dir = TempDir::new().unwrap();
    let scrambled = r#"{"n": 2, "hypersurfaces": [
      {"degree": 2, "terms": [{"exp": [0,0,2], "coeff": "-2/2"}, {"exp": [0,2,0], "coeff": 2}, {"exp": [2,0,0], "coeff": "1"}]},
      {"degree": 2, "terms": [{"exp": [2,0,0], "coeff": "6/2"}, {"exp": [0,2,0], "coeff": "5"}, {"exp": [0,0,2], "coeff": "-1"}]}]}"#;
    for command in [Command::Present, Command::Cohomology, Command::Chern, Command::Veronese, Command::Unstable] {
        let first = report(command, &file(&dir, "in.json", scrambled));
        let echo = serde_json::to_string(&first["input"]).unwrap();
        let second = report(command, &file(&dir, "echo.json", &echo));
        assert_eq!(first, second, "{command:?}");
        let reparsed: Value = serde_json::from_str(&serde_json::to_string(&second).unwrap()).unwrap();
        assert_eq!(reparsed, second);
    }
    let first =
        report(Command::TorelliPair, &file(&dir, "tp.json", &two_pairs(r#"[["6/4",0,0],[0,"20/7",0],[0,0,-1]]"#)));
    let second =
        report(Command::TorelliPair, &file(&dir, "tp2.json", &serde_json::to_string(&first["input"]).unwrap()));
    assert_eq!(first, second);
}

#[test]
fn input_errors_exit_one() {
    let dir = TempDir::new().unwrap();
    let unknown = file(&dir, "u.json", r#"{"n": 2, "hypersurfaces": [], "extra": 0}"#);
    assert_eq!(binary(&["chern", "--input", unknown.to_str().unwrap()]).0, 1);
    let broken = file(&dir, "b.json", "{");
    assert_eq!(binary(&["present", "--input", broken.to_str().unwrap()]).0, 1);
    let line =
        file(&dir, "l.json", r#"{"n": 1, "hypersurfaces": [{"degree": 1, "terms": [{"exp": [1,0], "coeff": "1"}]}]}"#);
    assert_eq!(binary(&["cohomology", "--input", line.to_str().unwrap()]).0, 1);
    assert_eq!(binary(&["reproduce", "no-such-suite"]).0, 1);
    let conics = file(&dir, "c.json", TWO_CONICS);
    let args = ["cohomology", "--input", conics.to_str().unwrap(), "--twist-min", "2", "--twist-max", "1"];
    assert_eq!(binary(&args).0, 1);
}

#[test]
fn cohomology_table_shape() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c.json", TWO_CONICS);
    let (code, r) =
        binary(&["cohomology", "--input", input.to_str().unwrap(), "--twist-min", "-1", "--twist-max", "1"]);
    assert_eq!(code, 0);
    let table = r["table"].as_array().unwrap();
    assert_eq!(table.len(), 9);
    let h0 = table.iter().find(|e| e["i"] == 0 && e["t"] == 0).unwrap();
    assert_eq!(h0["dim"], 1);
}

#[test]
fn jumping_coordinate_line() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "p.json", DIAGONAL_PAIR);
    let (code, r) =
        binary(&["splitting", "--input", input.to_str().unwrap(), "--line", "[[0,1,0],[0,0,1]]", "--twist", "-1"]);
    assert_eq!(code, 0);
    assert_eq!(r["splitting"], json!([1, -2]));
    assert_eq!(r["balanced"], false);
    let (_, r) =
        binary(&["splitting", "--input", input.to_str().unwrap(), "--line", "[[1,2,3],[-2,1,5]]", "--twist", "-1"]);
    assert_eq!(r["splitting"], json!([0, -1]));
}

#[test]
fn recover_reports_the_ledger() {
    let dir = TempDir::new().unwrap();
    let input = file(&dir, "c.json", TWO_CONICS);
    let candidates = file(
        &dir,
        "cand.json",
        r#"{"n": 2, "hypersurfaces": [
          {"degree": 2, "terms": [{"exp": [2,0,0], "coeff": "2"}, {"exp": [0,2,0], "coeff": "4"}, {"exp": [0,0,2], "coeff": "-2"}]},
          {"degree": 2, "terms": [{"exp": [2,0,0], "coeff": "1"}, {"exp": [0,2,0], "coeff": "1"}, {"exp": [0,0,2], "coeff": "1"}]}]}"#,
    );
    let (code, r) =
        binary(&["recover", "--input", input.to_str().unwrap(), "--candidates", candidates.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(r["claim_applies"], false);
    assert_eq!(r["hypotheses"]["enough_components"], false);
    assert!(r["dims"][0].as_u64().unwrap() >= 1);
    assert_eq!(binary(&["recover", "--input", input.to_str().unwrap()]).0, 1);
}

#[test]
fn rnc_points() {
    let dir = TempDir::new().unwrap();
    // t -> (1/(t+1), 1/(t+2), 1/(t+3)) at t = 0, 1, 2 after the frame points
    let on = r#"{"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,"1/2","1/3"],["1/2","1/3","1/4"]]}"#;
    let r = report(Command::Rnc, &file(&dir, "on.json", on));
    assert_eq!(r["on_common_rnc"], true);
    let off = r#"{"points": [[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,"1/2","1/3"],["1/2","1/3","1/5"]]}"#;
    let r = report(Command::Rnc, &file(&dir, "off.json", off));
    assert_eq!(r["on_common_rnc"], false);
}

#[test]
fn nc_and_pencil_reports() {
    let dir = TempDir::new().unwrap();
    let pair = file(&dir, "p.json", DIAGONAL_PAIR);
    let r = report(Command::NcCheck, &pair);
    assert_eq!((r["normal_crossings"].clone(), r["method"].clone()), (json!(true), json!("quadric-pencil")));
    let r = report(Command::Pencil, &pair);
    assert_eq!(r["distinct_roots"], 3);
    let double = file(&dir, "d.json", r#"{"n": 2, "A": [[1,0,0],[0,1,0],[0,0,-1]], "B": [[2,0,0],[0,2,0],[0,0,-1]]}"#);
    assert_eq!(report(Command::NcCheck, &double)["normal_crossings"], false);
    let r = report(Command::MonadCheck, &pair);
    assert_eq!(r["composition_zero"], true);
    let r = report(Command::Stability, &file(&dir, "c.json", TWO_CONICS));
    assert_eq!(r["c1_dual"], -1);
    assert_eq!(r["criterion"], true);
}
