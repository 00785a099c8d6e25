use std::process::{Command, Output};

fn conjrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conjrep"))
        .args(args)
        .env_remove("CONJREP_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn eval_symbolic() {
    let o = conjrep(&["eval", "s1", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "[ q^2  -q + q^2  0 ]\n[   0     1 - q  1 ]\n[   0         q  0 ]\n");

    let o = conjrep(&["eval", "s1 S1", "--n", "3"]);
    assert_eq!(stdout(&o), "[ 1  0  0 ]\n[ 0  1  0 ]\n[ 0  0  1 ]\n");

    let o = conjrep(&["eval", "", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dim"], 6);
    assert_eq!(v["entries"][5][5], serde_json::json!({"0": 1}));
    assert_eq!(v["entries"][0][5], serde_json::json!({}));
}

#[test]
fn eval_at_complex_q() {
    let o = conjrep(&["eval", "s1", "--n", "3", "--q", "i", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // q^2 at q = i
    assert_eq!(v["entries"][0][0], serde_json::json!([-1.0, 0.0]));

    let o = conjrep(&["eval", "s1", "--n", "3", "--q", "2+1i"]);
    assert!(stdout(&o).starts_with("[ 3.000000+4.000000i"));

    assert_eq!(code(&conjrep(&["eval", "s1", "--n", "3", "--q", "0"])), 2);
    assert_eq!(code(&conjrep(&["eval", "s1", "--n", "3", "--q", "abc"])), 2);
}

#[test]
fn parse_failures_exit_2() {
    assert_eq!(code(&conjrep(&["eval", "s9", "--n", "3"])), 2);
    assert_eq!(code(&conjrep(&["act", "x1", "--n", "3"])), 2);
    assert_eq!(code(&conjrep(&["shape-check", "--word", "q"])), 2);
    assert_eq!(code(&conjrep(&["verify-kernel", "--word", "a1"])), 2);
    assert_eq!(code(&conjrep(&["verify-kernel", "--theorem", "4"])), 2);
    assert_eq!(code(&conjrep(&["frobnicate"])), 2);
}

#[test]
fn act_prints_images_and_certificate() {
    let o = conjrep(&["act", "s1", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("x1 ↦ x1 x2 x1^-1\nx2 ↦ x1\nx3 ↦ x3\n"), "{out}");
    assert!(out.contains("pi = (1 2)"));

    let o = conjrep(&["act", "", "--n", "3"]);
    assert!(stdout(&o).contains("pi = id"));

    let a = conjrep(&["act", "a1 a2 s1", "--n", "3"]);
    let b = conjrep(&["act", "s2 a1 a2", "--n", "3"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_relations_reports_failures() {
    let o = conjrep(&["verify-relations", "--n", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1 of 1 relations hold"));

    // the sigma-sigma-alpha family does not hold as printed
    let o = conjrep(&["verify-relations", "--n", "3"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL [matrix, action] sigma-sigma-alpha"));
    assert!(out.contains("5 of 6 relations hold at n = 3"));

    let o = conjrep(&["verify-relations", "--n", "4", "--json"]);
    assert_eq!(code(&o), 1);
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let ok = v["matrix"].as_bool().unwrap() && v["action"].as_bool().unwrap();
        assert_eq!(ok, v["family"] != "sigma-sigma-alpha", "{line}");
    }
}

#[test]
fn builtin_verdicts_match_golden_records() {
    let golden = include_str!("golden/builtin_verdicts.jsonl");
    let mut lines = golden.lines();
    for (builtin, exit) in [("3", 0), ("5", 1)] {
        let o = conjrep(&["verify-kernel", "--theorem", builtin, "--json"]);
        assert_eq!(code(&o), exit);
        let got: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        let want: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
        assert_eq!(got, want);
    }
}

#[test]
fn verify_kernel_words() {
    let o = conjrep(&["verify-kernel", "--word", "a1", "--n", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("verdict: not-in-kernel"));

    let o = conjrep(&["verify-kernel", "--word", "S1 a1 a2 S2 a2 a1 s1 s2", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict: in-kernel-nontrivial"));
}

#[test]
fn search_outcomes() {
    let o = conjrep(&["search", "--n", "3", "--max-len", "2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("0 nontrivial kernel words"));

    let o = conjrep(&["search", "--n", "3", "--max-len", "8", "--threads", "2", "--json"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let records: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 160);
    assert!(records.iter().all(|r| r["verdict"] == "in-kernel-nontrivial" && r["length"] == 8));
    assert_eq!(records[0]["word"], "S1 a1 a2 S2 a2 a1 s1 s2");

    // at n = 2 the image of rho is abelian, so the kernel is large
    let o = conjrep(&["search", "--n", "2", "--max-len", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("1\ta1\n"));

    assert_eq!(code(&conjrep(&["search", "--n", "3", "--max-len", "0"])), 2);
    assert_eq!(code(&conjrep(&["search", "--n", "3", "--max-len", "4", "--half-len", "5"])), 2);
}

#[test]
fn seed_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_conjrep"));
        cmd.args(["search", "--n", "3", "--max-len", "6", "--seed", "1"]);
        match env {
            Some(v) => cmd.env("CONJREP_SEED", v),
            None => cmd.env_remove("CONJREP_SEED"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(code(&run(Some("7"))), 1);
    assert_eq!(code(&run(Some("seven"))), 2);
    assert_eq!(code(&run(None)), 1);
}

#[test]
fn shape_check() {
    let o = conjrep(&["shape-check", "--word", "s2 a2 a1 a1 a1 a2 S2 a2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("match r=2"));

    let o = conjrep(&["shape-check", "--word", "s2 a2 a1 a1 a1 a2 S2 a2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["r"], 2);
    assert_eq!(v["exponents"].as_array().unwrap().iter().map(|e| e.as_i64().unwrap()).sum::<i64>(), 0);

    for w in ["a1", "s1"] {
        let o = conjrep(&["shape-check", "--word", w]);
        assert_eq!(code(&o), 1);
        assert_eq!(stdout(&o), "no match\n");
    }
}
