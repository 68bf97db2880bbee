use std::process::{Command, Output};

use serde_json::Value;

fn gammakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gammakit"))
        .args(args)
        .env_remove("GAMMAKIT_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn canon_prints_terms() {
    let out = gammakit(&["canon", "g1*g0 + g0*g1"]);
    assert!(out.status.success());
    assert_eq!(stdout_json(&out)["terms"], serde_json::json!([]));
    let out = gammakit(&["canon", "g5*g5"]);
    let v = stdout_json(&out);
    assert_eq!(v["terms"][0]["monomial"], "I");
    assert_eq!(v["terms"][0]["coefficient"], "1");
}

#[test]
fn parse_errors_carry_positions() {
    let out = gammakit(&["canon", "g1 g2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 3"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(gammakit(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        gammakit(&["state", "--family", "psi9+", "--p", "0,0,0", "--m", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(gammakit(&[]).status.code(), Some(2));
}

#[test]
fn state_dump() {
    let out = gammakit(&["state", "--family", "chi2+", "--p", "0,0,3/4", "--m", "1"]);
    let v = stdout_json(&out);
    assert_eq!(v["E"]["exact"], "5/4");
    assert_eq!(v["bispinor"][1]["re"], "-1/3");
    assert_eq!(v["exponent_sign"], -1);

    // sqrt(2) has no rational value, so the energy falls back to a float
    let v = stdout_json(&gammakit(&[
        "state", "--family", "psi1+", "--p", "0,0,1", "--m", "1",
    ]));
    assert!((v["E"]["float"].as_f64().unwrap() - 2f64.sqrt()).abs() < 1e-12);

    let out = gammakit(&["state", "--family", "psi1+", "--p", "1,0,0", "--m", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn classify_state_lines() {
    let out = gammakit(&[
        "classify-state",
        "--family",
        "chi1+",
        "--p",
        "0,0,-3/4",
        "--m",
        "1",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["equation_tag"], "GammaPPlusM");
    assert_eq!(lines[1]["reading"], "NegativeMassEnergy");
}

#[test]
fn lorentz_commands() {
    let path = std::env::temp_dir().join(format!("gammakit-pt-{}.json", std::process::id()));
    std::fs::write(&path, "[-1,0,0,0, 0,-1,0,0, 0,0,-1,0, 0,0,0,-1]").unwrap();
    let v = stdout_json(&gammakit(&[
        "classify-lorentz",
        "--matrix",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["det_sign"], 1);
    assert_eq!(v["time_sign"], -1);
    std::fs::write(
        &path,
        "[\"5/4\",0,0,\"-3/4\", 0,1,0,0, 0,0,1,0, \"-3/4\",0,0,\"5/4\"]",
    )
    .unwrap();
    let v = stdout_json(&gammakit(&[
        "classify-lorentz",
        "--matrix",
        path.to_str().unwrap(),
    ]));
    assert_eq!(
        (v["det_sign"].as_i64(), v["time_sign"].as_i64()),
        (Some(1), Some(1))
    );
    std::fs::write(&path, "[2,0,0,0, 0,1,0,0, 0,0,1,0, 0,0,0,1]").unwrap();
    assert_eq!(
        gammakit(&["classify-lorentz", "--matrix", path.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    std::fs::remove_file(&path).ok();

    let scan = stdout_json(&gammakit(&["group-scan"]));
    let rows = scan.as_array().unwrap();
    assert_eq!(rows.len(), 15);
    assert_eq!(rows.iter().filter(|r| r["group"] == true).count(), 5);
}

#[test]
fn format_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_gammakit"))
        .args(["verify", "lorentz", "--seed", "3"])
        .env("GAMMAKIT_FORMAT", "md")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("# Suite `lorentz`"));
}
