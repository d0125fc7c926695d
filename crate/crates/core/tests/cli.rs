use std::path::Path;
use std::process::{Command, Output};

fn varpert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_varpert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn table1_csv_is_deterministic() {
    let a = varpert(&["table1", "--format", "csv"]);
    let b = varpert(&["table1", "--format", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("table,row,column,value,percent,note\n"));
    assert!(text.contains("diverges"));
}

#[test]
fn every_format_renders_every_command() {
    for cmd in ["table1", "table2", "table3", "sweep", "helium"] {
        for fmt in ["markdown", "csv", "json"] {
            let o = varpert(&[cmd, "--format", fmt, "--n-max", "3"]);
            assert!(o.status.success(), "{cmd} {fmt}: {}", stderr(&o));
            if fmt == "json" {
                let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
                assert!(v["tables"].as_array().is_some_and(|t| !t.is_empty()));
            }
        }
    }
}

#[test]
fn check_exit_codes() {
    assert_eq!(varpert(&["table1", "--check"]).status.code(), Some(0));
    assert_eq!(varpert(&["table2", "--check"]).status.code(), Some(0));
    let t3 = varpert(&["table3", "--check"]);
    assert_eq!(t3.status.code(), Some(2));
    assert!(stdout(&t3).contains("| FAIL |"));
    assert_eq!(varpert(&["helium", "--check"]).status.code(), Some(2));
}

#[test]
fn nonconvergence_exits_three() {
    let o = varpert(&["table1", "--b", "0.05", "--exact-tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAILED"));
}

#[test]
fn usage_errors_do_not_collide_with_check_failures() {
    assert_eq!(varpert(&["bogus"]).status.code(), Some(1));
    assert_eq!(varpert(&["table1", "--b", "-1"]).status.code(), Some(1));
    assert_eq!(varpert(&["--help"]).status.code(), Some(0));
}

#[test]
fn harmonic_limit() {
    let o = varpert(&["table1", "--b", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let half = (0.5f64 * 3.8099821).sqrt();
    for row in v["tables"][0]["rows"].as_array().unwrap().iter().take(5) {
        let x = row["cells"][0]["value"].as_f64().unwrap();
        assert!((x - half).abs() < 1e-8, "{}: {x}", row["label"]);
    }
}

#[test]
fn helium_partial_sum_shrinks_with_n_max() {
    let second = |n: &str| {
        let o = varpert(&["helium", "--n-max", n, "--format", "json"]);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v["tables"][0]["rows"][2]["cells"][0]["value"].as_f64().unwrap()
    };
    let (two, seven) = (second("2"), second("7"));
    assert!(two < 0.0 && two.abs() < seven.abs());
}

#[test]
fn m_range_and_pairs_switch_the_headline_sum() {
    let o = varpert(&["helium", "--m-range", "full"]);
    assert!(stdout(&o).contains("−l ≤ m ≤ l, n ≤ n′, n′ ≤ 7"));
    let o = varpert(&["helium", "--pairs", "ordered", "--check"]);
    assert!(stdout(&o).contains("-0.02449738"));
}

fn cache_run(path: &Path) -> Output {
    varpert(&["helium", "--cache", path.to_str().unwrap()])
}

#[test]
fn cache_cold_warm_and_corrupt() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("integrals.json");

    let cold = cache_run(&path);
    assert!(cold.status.success());
    assert!(stderr(&cold).contains("new file"));
    let stored: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(stored["version"], 1);

    let warm = cache_run(&path);
    assert_eq!(cold.stdout, warm.stdout);
    assert!(stderr(&warm).contains(" 0 misses"), "{}", stderr(&warm));

    std::fs::write(&path, "{\"version\": 1, \"entries\": ").unwrap();
    let rebuilt = cache_run(&path);
    assert!(rebuilt.status.success());
    assert_eq!(cold.stdout, rebuilt.stdout);
    assert!(stderr(&rebuilt).contains("WARN"));
    assert!(stderr(&rebuilt).contains("rebuilt"));

    std::fs::write(&path, r#"{"version": 0, "entries": {}}"#).unwrap();
    let stale = cache_run(&path);
    assert!(stderr(&stale).contains("version 0"));
    assert_eq!(cold.stdout, stale.stdout);
}

#[test]
fn warm_run_reports_hits() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    cache_run(&path);
    let warm = cache_run(&path);
    let line = stderr(&warm);
    let hits: u64 = line
        .split(", ")
        .find_map(|p| p.strip_suffix(" hits"))
        .and_then(|n| n.parse().ok())
        .unwrap();
    assert!(hits > 0);
}

#[test]
fn constants_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("constants.json");
    std::fs::write(&path, r#"{"kappa_eV_A2": 3.81}"#).unwrap();
    let base = stdout(&varpert(&["table1", "--format", "csv"]));
    let o = varpert(&["table1", "--format", "csv", "--constants", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_ne!(stdout(&o), base);

    std::fs::write(&path, r#"{"rydberg_eV": 13.6}"#).unwrap();
    let he = stdout(&varpert(&["helium", "--constants", path.to_str().unwrap()]));
    assert!(he.contains("-77.64919"), "{he}");

    std::fs::write(&path, r#"{"bohr_A": -1}"#).unwrap();
    let bad = varpert(&["helium", "--constants", path.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stderr(&bad).contains("bohr_A"));

    let missing = varpert(&["table1", "--constants", "/nonexistent/c.json"]);
    assert_eq!(missing.status.code(), Some(1));
}
