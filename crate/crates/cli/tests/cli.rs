use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subspace-ca"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_reports_family_size_and_gauss_terms() {
    let out = run(&["count", "--q", "2", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["max_coprime_family_size"], 3);
    assert_eq!(v["max_coprime_family_size_literal"], 4);
    assert_eq!(v["irreducible_counts"][2]["count"], 2);
    assert_eq!(v["irreducible_counts"][0]["count_excluding_x"], 1);
    assert_eq!(v["manifest"]["subcommand"], "count");
    assert_eq!(v["manifest"]["field"], "2");
}

#[test]
fn build_then_analyze_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.json");
    let path = path.to_str().unwrap();
    let built = run(&[
        "build-code",
        "--q",
        "2",
        "--k",
        "2",
        "--gcd",
        "1",
        "--out",
        path,
    ]);
    assert_eq!(built.status.code(), Some(0));
    let b = json(&built);
    assert_eq!(b["family_size"], 2);
    assert_eq!(b["predicted_min_distance"], 4);

    let out = run(&["analyze", "--code", path]);
    assert_eq!(out.status.code(), Some(0));
    let a = json(&out);
    let p = &a["params"];
    assert_eq!(
        (
            p["n"].as_u64(),
            p["max_dim"].as_u64(),
            p["min_distance"].as_u64()
        ),
        (Some(4), Some(2), Some(4))
    );
    assert_eq!(p["log_q_size"].as_f64(), Some(1.0));
    assert_eq!(a["gcd_profile"]["max_gcd_degree"], 0);
    assert_eq!(a["predicted_min_distance"], 4);

    // the code file is canonical: re-serializing it changes nothing
    let text = std::fs::read_to_string(path).unwrap();
    let file: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(b["code"], file);
    assert_eq!(serde_json::to_string_pretty(&file).unwrap() + "\n", text);

    // the full build-code report is also accepted
    let report = dir.path().join("report.json");
    std::fs::write(&report, &built.stdout).unwrap();
    let again = json(&run(&["analyze", "--code", report.to_str().unwrap()]));
    assert_eq!(again["params"], a["params"]);
}

#[test]
fn analyze_with_shared_factor() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let path = path.to_str().unwrap();
    assert_eq!(
        run(&[
            "build-code",
            "--q",
            "2",
            "--k",
            "3",
            "--gcd",
            "1,1",
            "--out",
            path
        ])
        .status
        .code(),
        Some(0)
    );
    let a = json(&run(&["analyze", "--code", path]));
    assert_eq!(a["params"]["min_distance"], 4);
    assert_eq!(a["gcd_profile"]["max_gcd_degree"], 1);
    assert_eq!(a["equidistant"], true);
}

#[test]
fn simulate_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let code = dir.path().join("c.json");
    let code = code.to_str().unwrap();
    run(&["build-code", "--q", "2", "--k", "3", "--out", code]);
    let stats = dir.path().join("stats.json");
    let stats = stats.to_str().unwrap();
    let args = [
        "simulate",
        "--code",
        code,
        "--erasures",
        "1",
        "--errors",
        "1",
        "--trials",
        "300",
        "--seed",
        "9",
        "--out",
        stats,
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(std::fs::read(stats).unwrap(), first.stdout);
    let v = json(&first);
    assert_eq!(v["manifest"]["seed"], 9);
    assert_eq!(v["stats"]["success_rate"].as_f64(), Some(1.0));
    assert_eq!(v["stats"]["ambiguities"], 0);
}

#[test]
fn kernel_output() {
    let v = json(&run(&["kernel", "--q", "2", "--poly", "1,1,1", "--n", "4"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(
        v["kernel"]["entries"],
        serde_json::json!([[1, 0, 1, 1], [0, 1, 1, 0]])
    );
    assert_eq!(v["transition_matrix"]["rows"], 2);
    assert_eq!(v["rule"]["display"], "1 + X + X^2");
}

#[test]
fn search_matches_formula() {
    let v = json(&run(&[
        "search-max",
        "--q",
        "2",
        "--k",
        "4",
        "--t",
        "0",
        "--budget",
        "100",
    ]));
    assert_eq!(v["size"], 5);
    assert_eq!(v["formula_size"], 5);
    let g = json(&run(&[
        "search-max",
        "--q",
        "2",
        "--k",
        "3",
        "--gcd",
        "1,1",
    ]));
    assert_eq!(g["size"], 2);
}

#[test]
fn domain_errors_exit_1_with_kind() {
    let out = run(&[
        "search-max",
        "--q",
        "2",
        "--k",
        "5",
        "--t",
        "0",
        "--budget",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "BudgetExceeded");

    let out = run(&["kernel", "--q", "4", "--poly", "1,1", "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "NotPrime");

    let out = run(&["kernel", "--q", "2", "--poly", "0,1", "--n", "3"]);
    assert_eq!(json(&out)["error"]["kind"], "NotBipermutive");

    let out = run(&["analyze", "--code", "/nonexistent/code.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["error"]["kind"], "Io");
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["simulate"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--code"));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(
        run(&["count", "--q", "2", "--k", "x"]).status.code(),
        Some(2)
    );
}

#[test]
fn csv_tables() {
    let out = run(&["count", "--q", "3", "--k", "2", "--csv"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "degree,count,count_excluding_x\n1,3,2\n2,3,3\n"
    );
}
