use std::process::{Command, Output};

fn wpid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wpid")).args(args).output().expect("wpid runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn emit_appendix1_latex() {
    let o = wpid(&["emit", "--genus", "3", "--set", "appendix1", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("\\begin{equation}").count(), 15);
}

#[test]
fn emit_bilinear_json() {
    let o = wpid(&["emit", "--genus", "2", "--set", "bilinear", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let parsed = hyperwp::emit::parse_json(&stdout(&o)).unwrap();
    assert_eq!(parsed.len(), 4);
}

#[test]
fn emit_ode_has_weight_zero() {
    let o = wpid(&["emit", "--genus", "1", "--set", "ode"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("weight=0"));
}

#[test]
fn emission_is_deterministic() {
    let a = wpid(&["emit", "--genus", "3", "--set", "P9", "--format", "json"]);
    let b = wpid(&["emit", "--genus", "3", "--set", "P9", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn emit_to_file() {
    let path = std::env::temp_dir().join(format!("wpid-kummer-{}.txt", std::process::id()));
    let o = wpid(&["emit", "--genus", "2", "--set", "kummer", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("kummer\t"));
}

#[test]
fn check_genus1_all() {
    let o = wpid(&["check", "--genus", "1", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn check_genus2_symbolic() {
    let o = wpid(&["check", "--genus", "2", "--suite", "symbolic"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn appendix2_as_printed_fails_with_residuals() {
    let o = wpid(&["check", "--genus", "3", "--suite", "oracle", "--set", "appendix2-as-printed"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("B2223:"), "{out}");
    assert!(out.contains("verification failed"));
}

#[test]
fn check_json_report() {
    let o = wpid(&["check", "--genus", "2", "--suite", "oracle", "--set", "kummer", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["oracle"].as_array().unwrap().len(), 2);
}

#[test]
fn explicit_curve() {
    let o = wpid(&["check", "--genus", "2", "--suite", "oracle", "--set", "bilinear", "--curve", "3,1,-1,2,1,1,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("a=(3,1,-1,2,1,1,1)"));
}

#[test]
fn multiplets() {
    for (g, hw, n) in [("3", "P9", 9), ("3", "P7", 7), ("2", "baker4", 5)] {
        let o = wpid(&["multiplet", "--genus", g, "--hw", hw, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["members"].as_array().unwrap().len(), n, "{hw}");
        assert_eq!(v["members"][1]["weight"].as_i64().unwrap() + 2, v["members"][0]["weight"].as_i64().unwrap());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(wpid(&["emit", "--genus", "7", "--set", "ode"]).status.code(), Some(2));
    assert_eq!(wpid(&["emit", "--genus", "1", "--set", "nope"]).status.code(), Some(2));
    assert_eq!(wpid(&["multiplet", "--genus", "2", "--hw", "P9"]).status.code(), Some(2));
    assert_eq!(wpid(&["check", "--genus", "2", "--curve", "1,2,3"]).status.code(), Some(2));
    let degenerate = wpid(&["check", "--genus", "1", "--suite", "oracle", "--curve", "1,0,1/3,0,1"]);
    assert_eq!(degenerate.status.code(), Some(3));
}

#[test]
fn corrected_appendix2_passes() {
    let o = wpid(&["check", "--genus", "3", "--suite", "oracle", "--set", "appendix2-corrected"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn discrepancy_report_json() {
    let o = wpid(&["emit", "--genus", "3", "--set", "discrepancies", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["baker_equivalence"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["symbol"] == "B2223" && r["printed_certified"] == false));
}
