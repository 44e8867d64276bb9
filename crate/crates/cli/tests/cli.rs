use std::process::{Command, Output};

fn liaison(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liaison"))
        .args(args)
        .env_remove("LIAISON_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reduction_number_of_the_question_instance() {
    let o = liaison(&["rednum", "--ring", "QQ[x,y]", "-I", "x^3,y^3,x^2*y", "-J", "x^3,y^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "r = 2");
}

#[test]
fn colength_of_pure_cubes() {
    let o = liaison(&["length", "--ring", "QQ[x,y]", "-I", "x^3,y^3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "9");
}

#[test]
fn flags_may_precede_the_subcommand() {
    let o = liaison(&["--ring", "QQ[x,y]", "-I", "x^3,y^3", "length", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["length"], 9);
}

#[test]
fn verify_paper_emits_a_stable_report_array() {
    let first = liaison(&["verify-paper", "--json"]);
    assert_eq!(first.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(reports.len() > 50);
    assert!(reports.iter().all(|r| r["verdict"] != "FAILS"));
    let bound = reports.iter().find(|r| r["scenario"] == "published-bound/ternary-squares").unwrap();
    assert_eq!(bound["values"]["violated"], true);
    let again = liaison(&["verify-paper", "--json"]);
    assert_eq!(first.stdout, again.stdout);
}

#[test]
fn parse_errors_exit_with_two() {
    let o = liaison(&["length", "--ring", "QQ[x", "-I", "x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn missing_ideal_is_an_input_error() {
    let o = liaison(&["gb", "--ring", "QQ[x,y]"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("-I/--ideal"));
}

#[test]
fn resource_limits_exit_with_three() {
    let o = liaison(&["gb", "--ring", "QQ[x,y]", "-I", "x^3 - y^2, x*y", "--max-pairs", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn field_override_from_the_environment() {
    let qq = liaison(&["length", "--ring", "QQ[x]", "-I", "7*x - 1"]);
    assert_eq!(stdout(&qq).trim(), "1");
    let f7 = Command::new(env!("CARGO_BIN_EXE_liaison"))
        .args(["length", "--ring", "QQ[x]", "-I", "7*x - 1"])
        .env("LIAISON_FIELD", "GF(7)")
        .output()
        .unwrap();
    assert_eq!(stdout(&f7).trim(), "0");
}

#[test]
fn sharpness_instance_is_not_a_failure() {
    let o = liaison(&["check-234", "--ring", "QQ[x,y]", "-J", "x^2,y^2", "--s", "2", "--k", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["values"]["outcome"], "SHARPNESS-WITNESS");
}

#[test]
fn pairing_matrix_of_binary_cubes() {
    let o = liaison(&["pairing", "--ring", "QQ[x,y]", "-J", "x^3,y^3", "--s", "2", "--k", "2"]);
    assert!(stdout(&o).contains("matrix = [[0,1],[1,0]]"));
}

#[test]
fn socle_type_of_the_square_of_m() {
    let o = liaison(&["socle", "--ring", "QQ[x,y]", "-I", "x^2,x*y,y^2"]);
    assert!(stdout(&o).contains("type = 2"));
}

#[test]
fn strengthened_bound_is_informational() {
    let o = liaison(&["check-2310", "--ring", "QQ[x,y]", "-J", "x^3,y^3", "--s", "2", "--k", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["values"]["strengthened_bound_holds"], false);
    assert_eq!(v[0]["verdict"], "HOLDS");
}
