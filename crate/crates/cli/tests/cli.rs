use std::process::{Command, Output};

fn faber(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_faber")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn tmp(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("faber-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn kp_examples() {
    assert_eq!(stdout(&faber(&["kp", "--n", "1", "--p", "-2"])), "-2*a2\n");
    assert_eq!(stdout(&faber(&["kp", "--n", "0", "--p", "5"])), "1\n");
    let json = stdout(&faber(&["kp", "--n", "3", "--p", "-4", "--format", "json"]));
    assert_eq!(
        json.trim(),
        r#"{"vars":["a2","a3","a4"],"terms":[{"coeff":"-20/1","exps":[3,0,0]},{"coeff":"20/1","exps":[1,1,0]},{"coeff":"-4/1","exps":[0,0,1]}]}"#
    );
    assert_eq!(faber(&["kp", "--n", "5", "--p", "1", "--order", "3"]).status.code(), Some(2));
}

#[test]
fn invert_examples() {
    let generic = stdout(&faber(&["invert", "--generic", "--order", "4"]));
    assert_eq!(generic, "b2 = -a2\nb3 = 2*a2^2 - a3\nb4 = -5*a2^3 + 5*a2*a3 - a4\n");
    let exact = stdout(&faber(&["invert", "--coeffs", "1,0,0", "--order", "4"]));
    assert_eq!(exact, "b2 = -1\nb3 = 2\nb4 = -5\n");

    let path = tmp("numeric.json");
    std::fs::write(&path, r#"{"coeffs": [1, 1, 0, [0, 0]]}"#).unwrap();
    let out = faber(&["invert", "--input", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(stdout(&out), "n,re,im\n2,-1,0\n3,2,0\n4,-5,0\n");

    let identity = tmp("identity.json");
    let series = faber::SymbolicSeries::identity(5).to_json();
    std::fs::write(&identity, series).unwrap();
    let out = stdout(&faber(&["invert", "--input", identity.to_str().unwrap()]));
    assert_eq!(out, "b2 = 0\nb3 = 0\nb4 = 0\nb5 = 0\n");

    std::fs::write(&path, "{\"coeffs\": [2, 1]}").unwrap();
    assert_eq!(faber(&["invert", "--input", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(faber(&["invert"]).status.code(), Some(2));
}

#[test]
fn bounds_examples() {
    let a2 = stdout(&faber(&["bounds", "--target", "a2", "--lambda", "1", "--mu", "1", "--delta", "0", "--alpha", "0"]));
    let row = a2.lines().nth(1).unwrap();
    assert!(row.ends_with(",a2,sqrt,sqrt,sqrt:2/3"), "{row}");

    let an = stdout(&faber(&[
        "bounds", "--target", "an", "--n", "4", "--lambda", "1", "--mu", "1", "--delta", "0", "--alpha", "0",
    ]));
    assert!(an.lines().nth(1).unwrap().ends_with(",rational,1/2"));

    let grid = stdout(&faber(&["bounds", "--target", "fekete", "--alpha", "0:0.9:0.3", "--format", "json"]));
    let rows: serde_json::Value = serde_json::from_str(&grid).unwrap();
    let values: Vec<f64> = rows.as_array().unwrap().iter().map(|r| r["bound_f64"].as_f64().unwrap()).collect();
    assert_eq!(values.len(), 4);
    assert!(values.windows(2).all(|w| w[1] < w[0]));

    assert_eq!(faber(&["bounds", "--alpha", "1"]).status.code(), Some(2));
    assert_eq!(faber(&["bounds", "--alpha", "0:1:0"]).status.code(), Some(2));
    assert_eq!(faber(&["bounds", "--target", "an", "--n", "3"]).status.code(), Some(2));
    assert_eq!(faber(&["bounds", "--target", "an", "--n", "3", "--unchecked"]).status.code(), Some(0));
    assert_eq!(faber(&["bounds", "--class", "unknown"]).status.code(), Some(2));
}

#[test]
fn specialization_flag() {
    let out = stdout(&faber(&["bounds", "--class", "srivastava", "--lambda", "3", "--mu", "0", "--delta", "2"]));
    assert!(out.lines().nth(1).unwrap().starts_with("1/1,1/1,0/1,0/1,"));
}

#[test]
fn audit_runs() {
    let out = faber(&["audit", "--order", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let items: Vec<&str> = reports.as_array().unwrap().iter().map(|r| r["item"].as_str().unwrap()).collect();
    assert!(items.contains(&"inverse-coefficient-A4"));
    assert!(items.iter().any(|i| i.starts_with("theorem1-denominator[n=4 lambda=1/1 mu=1/1 delta=1/1")));
    assert_eq!(faber(&["audit", "--order", "17"]).status.code(), Some(2));
    assert_eq!(faber(&["audit", "--order", "3"]).status.code(), Some(2));
}

#[test]
fn sample_summary_and_assert() {
    let csv = tmp("sample.csv");
    let out = faber(&[
        "sample", "--lambda", "1", "--mu", "1", "--delta", "0", "--alpha", "0", "--trials", "10000", "--seed", "42",
        "--assert", "--out", csv.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let summary = stdout(&out);
    assert!(summary.starts_with("trials=10000 accepted="), "{summary}");
    assert!(summary.contains(" violations=0 "));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("trial,c1_re,c1_im,c2_re,c2_im,d2_re,d2_im,a2_abs,a2_bound,a2_margin,"));

    let a = faber(&["sample", "--trials", "1", "--seed", "5"]);
    let b = faber(&["sample", "--trials", "1", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(faber(&["sample", "--trials", "0"]).status.code(), Some(2));
}

#[test]
fn boundary_rows_reach_equality() {
    let out = stdout(&faber(&["sample", "--boundary", "--trials", "9", "--seed", "3"]));
    let mut equalities = 0;
    for line in out.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        // a2_margin, a3_margin, fekete_margin
        if [cols[9], cols[12], cols[15]].iter().any(|m| m.abs() <= 1e-12) {
            equalities += 1;
        }
    }
    assert!(equalities >= 6, "{out}");
}

#[test]
fn theorem1_sampling() {
    let out = faber(&["sample", "--theorem", "1", "--n", "5", "--delta", "1", "--trials", "500", "--assert"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("trial,c_re,c_im,an_abs,an_bound,"));
    assert_eq!(faber(&["sample", "--theorem", "1", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn config_file_with_overrides() {
    let cfg = tmp("config.json");
    std::fs::write(&cfg, r#"{"lambda": "2", "mu": 0, "order": 3, "format": "text"}"#).unwrap();
    let c = cfg.to_str().unwrap();
    assert_eq!(stdout(&faber(&["operator", "--config", c])), "F1 = 2*a2\nF2 = -2*a2^2 + 4*a3\n");
    assert_eq!(stdout(&faber(&["--config", c, "operator", "--lambda", "1"])), "F1 = a2\nF2 = -a2^2 + 2*a3\n");

    std::fs::write(&cfg, r#"{"unknown": 1}"#).unwrap();
    assert_eq!(faber(&["operator", "--config", c]).status.code(), Some(2));
    std::fs::write(&cfg, "[1, 2]").unwrap();
    assert_eq!(faber(&["operator", "--config", c]).status.code(), Some(2));
    assert_eq!(faber(&["operator", "--config", "/no/such/file"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["kp", "--n", "x", "--p", "1"],
        vec!["bell", "--n", "2", "--m", "3"],
        vec!["operator", "--lambda", "1/2"],
        vec!["operator", "--mu", "1:2:1"],
        vec!["invert", "--coeffs", "1,x"],
        vec![],
    ] {
        let out = faber(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!String::from_utf8_lossy(&out.stderr).contains("panicked"));
    }
    assert_eq!(faber(&["--help"]).status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let path = tmp("bell.txt");
    let out = faber(&["bell", "--n", "4", "--m", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "a2^2 + 2*a3\n");
    assert_eq!(faber(&["bell", "--n", "4", "--m", "2", "--out", "/no/such/dir/x"]).status.code(), Some(2));
}
