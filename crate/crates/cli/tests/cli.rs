use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bordismkit"));
    cmd.args(args).env_remove("BORDISMKIT_MAX_N");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn dim_golden_and_cap() {
    let out = run(&["dim", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out), json!({"dim": 13}));

    let out = run(&["dim", "--n", "99"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["code"], "resource");
}

#[test]
fn env_var_overrides_rank_cap() {
    let out = run_env(&["dim", "--n", "3"], &[("BORDISMKIT_MAX_N", "2")]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["code"], "resource");
    let out = run_env(&["dim", "--n", "2"], &[("BORDISMKIT_MAX_N", "2")]);
    assert_eq!(json_of(&out), json!({"dim": 1}));
    let out = run_env(&["dim", "--n", "2"], &[("BORDISMKIT_MAX_N", "two")]);
    assert_eq!(code(&out), 2);
}

#[test]
fn unitary_window_dim() {
    let out = run(&["dim", "--n", "1", "--ring", "z-ext"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out), json!({"dim": 1, "weight_bound": 1}));
}

#[test]
fn single_monomial_is_not_in_image() {
    let out = run(&["check", &data("single_monomial.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out), json!({"in_image": false, "reason": "d(g*) != 0"}));
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        vec!["check", "{\"n\": 2"],
        vec!["check", "{\"n\": 2, \"ring\": \"gf2\"}"],
        vec!["check", "/nonexistent/file.json"],
        vec!["dim"],
        vec!["frobnicate"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}");
    }
    let out = run(&["check", "{\"n\": 2"]);
    assert_eq!(json_of(&out)["error"]["code"], "malformed");
}

#[test]
fn domain_errors_exit_1() {
    let rp2 = run(&["poly-of-polytope", &data("rp2_polytope.json")]);
    let primal = run(&["dual", &stdout(&rp2)]);
    let out = run(&["reduce", &stdout(&primal)]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["code"], "flavor-mismatch");

    let out = run(&["torus-poly", &data("cp1_torus_graph.json")]);
    assert_eq!(code(&out), 1);
    assert_eq!(json_of(&out)["error"]["code"], "missing-orientation");
}

#[test]
fn rp2_chain_through_the_cli() {
    let dual = run(&["poly-of-polytope", &data("rp2_polytope.json")]);
    assert_eq!(code(&dual), 0);
    let primal = run(&["dual", &stdout(&dual)]);
    assert_eq!(json_of(&run(&["check", &stdout(&primal)])), json!({"in_image": true}));
    let graph = run(&["poly-of-graph", &data("triangle_graph.json")]);
    assert_eq!(stdout(&graph), stdout(&primal));
    let back = run(&["dual", &stdout(&primal)]);
    assert_eq!(stdout(&back), stdout(&dual));
}

#[test]
fn outputs_round_trip_byte_identically() {
    let pair = run(&["torus-poly", &data("cp2_pair.json")]);
    let text = stdout(&pair);
    let twice = run(&["dual", &stdout(&run(&["dual", &text]))]);
    assert_eq!(stdout(&twice), text);

    let reduced = run(&["reduce", &text]);
    let again = run(&["dual", &stdout(&run(&["dual", &stdout(&reduced)]))]);
    let mut expected = json_of(&reduced);
    expected.as_object_mut().unwrap().remove("flavor");
    assert_eq!(json_of(&again), expected);
}

#[test]
fn cp2_reduces_to_rp2_and_has_chern_numbers() {
    let cp2 = stdout(&run(&["torus-poly", &data("cp2_pair.json")]));
    let reduced = json_of(&run(&["reduce", &cp2]));
    assert_eq!(reduced["flavor"], "unoriented-z2torus");
    let rp2 = stdout(&run(&["dual", &stdout(&run(&["poly-of-polytope", &data("rp2_polytope.json")]))]));
    assert_eq!(reduced["terms"], serde_json::from_str::<Value>(&rp2).unwrap()["terms"]);

    let c = json_of(&run(&["chern", &cp2, "--i", "2", "--j", "0"]));
    assert_eq!(c["value"], 9);
    let c = json_of(&run(&["chern", &cp2, "--i", "0", "--j", "1"]));
    assert_eq!(c["value"], 3);
    let table = json_of(&run(&["chern", &cp2]));
    assert_eq!(table["degree_bound"], 4);
    assert_eq!(table["all_vanish"], false);
}

#[test]
fn chern_from_fixed_points_and_oriented_graph() {
    let c = json_of(&run(&["chern", &data("cp1_points.json"), "--i", "1", "--j", "0"]));
    assert_eq!(c["value"], 2);
    let out = run(&["torus-poly", "--orient", &data("cp1_torus_graph.json")]);
    assert_eq!(code(&out), 0);
    assert_eq!(json_of(&out)["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn differential_of_cp2() {
    let cp2 = stdout(&run(&["torus-poly", &data("cp2_pair.json")]));
    let dual = stdout(&run(&["dual", &cp2]));
    let d = json_of(&run(&["diff", &dual]));
    assert_eq!(d["terms"], json!([]));
}

#[test]
fn generators_span_at_rank_3() {
    let out = json_of(&run(&["generators", "--n", "3"]));
    assert_eq!(out["span_rank"], 13);
    assert_eq!(out["count"], out["generators"].as_array().unwrap().len());
}

#[test]
fn verify_subset_passes() {
    let out = run(&["verify", "--criterion", "7", "--criterion", "10"]);
    assert_eq!(code(&out), 0);
    let doc = json_of(&out);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 2);
}

#[test]
fn inline_and_stdin_inputs_agree() {
    use std::io::Write;
    use std::process::Stdio;
    let text = std::fs::read_to_string(data("single_monomial.json")).unwrap();
    let inline = run(&["dual", &text]);
    let mut child = Command::new(env!("CARGO_BIN_EXE_bordismkit"))
        .args(["dual", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    assert_eq!(stdout(&piped), stdout(&inline));
}
