use std::collections::BTreeSet;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_composihedra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const CK4_ROWS: [&str; 15] = [
    "1 1 2 3", "1 0 2 3", "1 0 0 3", "1 0 0 0", "1 2 1 3", "1 2 0 3", "1 3 1 2", "1 3 0 2",
    "1 3 0 0", "1 3 2 1", "1 3 2 0", "1 1 4 1", "1 0 4 1", "1 1 4 0", "1 0 4 0",
];

#[test]
fn count() {
    let out = run(&["count", "--n", "9"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "vertices 12235\nfacets 263 (upper 255, lower 8)\n"
    );
    let out = run(&["count", "--n", "1"]);
    assert_eq!(stdout(&out), "vertices 1\n");
}

#[test]
fn enumerate() {
    let out = run(&["enumerate", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 21);
    let out = run(&["enumerate", "--n", "4", "--classes"]);
    assert_eq!(stdout(&out).lines().count(), 15);
}

#[test]
fn realize_polymake() {
    let out = run(&["realize", "--family", "ck", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("POINTS"));
    let rows: BTreeSet<&str> = lines.collect();
    assert_eq!(rows, CK4_ROWS.into_iter().collect());

    let out = run(&["realize", "--family", "j", "--n", "3", "--q", "1/2"]);
    assert_eq!(stdout(&out).lines().count(), 7);
    let out = run(&["realize", "--family", "k", "--n", "4"]);
    assert_eq!(stdout(&out).lines().count(), 6);
    let out = run(&[
        "realize",
        "--n",
        "4",
        "--weights",
        "1,2,3,4",
        "--format",
        "json",
    ]);
    assert!(stdout(&out).contains("\"num\": \"21\""));
}

#[test]
fn verify_passes() {
    let out = run(&["verify", "--n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.starts_with("PASS")));
    assert!(text.contains("5 vertices from inequalities, 5 from trees"));

    let out = run(&["--json", "verify", "--n", "4", "--weights", "2,1,3,1"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["command"], "verify");
    assert_eq!(report["checks"].as_array().unwrap().len(), 5);
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));
}

#[test]
fn export_files() {
    let dir = std::env::temp_dir().join(format!("composihedra-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ck4.poly");
    let out = run(&[
        "export",
        "--format",
        "polymake",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 16);

    let path = dir.join("poset.json");
    let out = run(&[
        "export",
        "--format",
        "json",
        "--object",
        "poset",
        "--n",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let poset: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(poset["labels"].as_array().unwrap().len(), 12);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bad_input_fails() {
    for args in [
        &["count"][..],
        &["realize", "--family", "j", "--n", "3"],
        &["realize", "--n", "3", "--q", "1/2"],
        &["realize", "--n", "3", "--weights", "1,2"],
        &["realize", "--n", "3", "--weights", "1,0,2"],
        &["realize", "--family", "j", "--n", "3", "--q", "3/2"],
        &["realize", "--family", "j", "--n", "3", "--q", "half"],
        &["verify", "--n", "1"],
        &[
            "export", "--format", "polymake", "--object", "hrep", "--out", "/tmp/x",
        ],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
