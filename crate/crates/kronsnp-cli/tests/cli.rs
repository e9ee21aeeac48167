use std::process::{Command, Output};

fn kronsnp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronsnp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn kron_text_and_json() {
    let o = kronsnp(&["kron", "1,1", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "s(2)");

    let o = kronsnp(&["kron", "5,4,4", "7,6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 13);
    assert_eq!(v["terms"].as_array().unwrap().len(), 58);
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([9, 3, 1]));
}

#[test]
fn kron_monomials() {
    let o = kronsnp(&["kron", "1,1", "1,1", "--monomials", "2", "--format", "json"]);
    assert_eq!(stdout(&o).split_whitespace().collect::<String>(), r#"{"k":2,"degree":2,"sorted_points":[[2,0],[1,1]]}"#);
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(kronsnp(&["kron", "3", "2,2"]).status.code(), Some(3));
    assert_eq!(kronsnp(&["kron", "1,2", "3"]).status.code(), Some(2));
    assert_eq!(kronsnp(&["snp", "4,x", "4,4", "--vars", "2"]).status.code(), Some(2));
    assert_eq!(kronsnp(&["horn", "9"]).status.code(), Some(4));
    assert_eq!(kronsnp(&["polytope", "4,4", "6,1,1", "3,3,2"]).status.code(), Some(3));
    assert_eq!(kronsnp(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(kronsnp(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn snp_verdicts() {
    let o = kronsnp(&["snp", "5,4,4", "7,6", "--vars", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "saturated");
    assert_eq!(kronsnp(&["snp", "4,4", "4,4", "--vars", "4"]).status.code(), Some(0));
}

#[test]
fn horn_polytope_rosas_plethysm() {
    let o = kronsnp(&["horn", "2"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(stdout(&o).contains("[2] [1] [2]"));

    let o = kronsnp(&["polytope", "7,6", "5,4,4", "5,4,4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["feasible"], true);
    assert!(v["integer_point"].is_array());

    assert_eq!(stdout(&kronsnp(&["rosas", "7,6", "8,5", "5,4,3,1"])).trim(), "2");
    assert_eq!(stdout(&kronsnp(&["rosas", "2,2", "2,2", "2,2"])).trim(), "1");

    let o = kronsnp(&["plethysm", "2", "2"]);
    assert_eq!(stdout(&o).trim(), "s(4) + s(2,2)");
    let o = kronsnp(&["plethysm", "1,1,1", "2,1", "--max-monomial"]);
    assert_eq!(stdout(&o).trim(), "[5, 3, 1]");
}

#[test]
fn json_output_is_deterministic() {
    let args = ["kron", "6,6", "8,2,1,1", "--format", "json"];
    assert_eq!(stdout(&kronsnp(&args)), stdout(&kronsnp(&args)));
    let args = ["verify", "horn-appendix", "--format", "json", "--n", "6"];
    assert_eq!(stdout(&kronsnp(&args)), stdout(&kronsnp(&args)));
}

#[test]
fn verify_suites() {
    let o = kronsnp(&["verify", "paper-values"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = kronsnp(&["verify", "horn-appendix", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let o = kronsnp(&["verify", "snp-theorems", "--n", "7", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(kronsnp(&["verify", "limit", "--time-limit", "0"]).status.code(), Some(4));
}

#[test]
fn verify_fixture_override() {
    let dir = std::env::temp_dir().join(format!("kronsnp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("short.json");
    std::fs::write(&path, r#"{"r": 6, "triples": [[[1], [1], [1]]]}"#).unwrap();
    let o = kronsnp(&["verify", "horn-appendix", "--n", "4", "--fixture", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(10));
    assert!(stdout(&o).contains("FAIL"));
    let missing = dir.join("absent.json");
    let o = kronsnp(&["verify", "horn-appendix", "--fixture", missing.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::remove_dir_all(&dir).unwrap();
}
