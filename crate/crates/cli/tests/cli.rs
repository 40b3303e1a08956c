use std::path::Path;
use std::process::{Command, Output};

fn rsdp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsdp")).args(args).output().expect("spawn rsdp")
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn star_files(dir: &Path) -> (String, String, String) {
    std::fs::write(dir.join("g.edges"), "0 1\n0 2\n0 3\n0 4\n").unwrap();
    std::fs::write(dir.join("g.csv"), "vertex,l0\n0,0\n1,1\n2,0\n3,0\n4,0\n").unwrap();
    std::fs::write(
        dir.join("q.json"),
        r#"{"type": "profile", "id": "spy", "profile": "neighbor_label", "params": {"dim": 0, "in": [1]}}"#,
    )
    .unwrap();
    (p(&dir.join("g.edges")).to_owned(), p(&dir.join("g.csv")).to_owned(), p(&dir.join("q.json")).to_owned())
}

#[test]
fn verify_defaults_pass() {
    let out = rsdp(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(rsdp(&["project"]).status.code(), Some(1));
    assert_eq!(rsdp(&["bogus"]).status.code(), Some(1));
    assert_eq!(rsdp(&["--help"]).status.code(), Some(0));
    assert_eq!(rsdp(&["verify", "-n", "9"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.edges"), "0 x\n").unwrap();
    std::fs::write(dir.path().join("l.csv"), "vertex,l0\n0,0\n1,0\n").unwrap();
    let out = rsdp(&[
        "project",
        "--edges",
        p(&dir.path().join("bad.edges")),
        "--labels",
        p(&dir.path().join("l.csv")),
        "--model",
        "edge",
        "-k",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn budget_is_enforced_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let (e, l, q) = star_files(dir.path());
    let budget = dir.path().join("budget.json");
    let args = |eps: &'static str| {
        vec![
            "answer".to_owned(),
            "--edges".into(),
            e.clone(),
            "--labels".into(),
            l.clone(),
            "--model".into(),
            "edge".into(),
            "-k".into(),
            "2".into(),
            "--epsilon".into(),
            eps.into(),
            "--query".into(),
            q.clone(),
            "--budget".into(),
            p(&budget).to_owned(),
            "--budget-epsilon".into(),
            "1".into(),
        ]
    };
    let run = |eps| {
        let a = args(eps);
        rsdp(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    assert_eq!(run("0.6").status.code(), Some(0));
    assert_eq!(run("0.6").status.code(), Some(2));
    assert_eq!(run("0.4").status.code(), Some(0));
    let ledger: serde_json::Value = serde_json::from_slice(&std::fs::read(&budget).unwrap()).unwrap();
    assert_eq!(ledger["entries"].as_array().unwrap().len(), 2);
}

#[test]
fn vertex_scale_only_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let (e, l, q) = star_files(dir.path());
    let base = [
        "answer",
        "--edges",
        &e,
        "--labels",
        &l,
        "--model",
        "vertex",
        "-k",
        "1",
        "--epsilon",
        "1",
        "--delta",
        "0.01",
        "--query",
        &q,
    ];
    let hidden: serde_json::Value = serde_json::from_slice(&rsdp(&base).stdout).unwrap();
    assert!(hidden.get("noise_scale").is_none());
    assert!(hidden.get("d_hat").is_none());
    let mut with = base.to_vec();
    with.push("--emit-scale");
    let shown: serde_json::Value = serde_json::from_slice(&rsdp(&with).stdout).unwrap();
    assert!(shown["noise_scale"].as_f64().unwrap() > 0.0);
    assert_eq!(shown["noisy_value"], hidden["noisy_value"]);
}
