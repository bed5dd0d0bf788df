use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn knitgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knitgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &TempDir, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.path().join(format!("{name}.json"));
    let mut all = vec!["gen"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["-o", path_str(&path)]);
    let out = knitgraph(&all);
    assert_eq!(status(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn chain3(dir: &TempDir) -> PathBuf {
    let path = dir.path().join("chain3.json");
    fs::write(
        &path,
        r#"{"n": 3, "directed": true, "multigraph": false,
            "edges": [{"src": 0, "dst": 1, "color": null}, {"src": 1, "dst": 2, "color": null}],
            "meta": {}}"#,
    )
    .unwrap();
    path
}

#[test]
fn decide_round_stockinette_then_validate() {
    let dir = TempDir::new().unwrap();
    let round = gen(
        &dir,
        "round3x3",
        &[
            "--pattern",
            "stockinette",
            "--rows",
            "3",
            "--cols",
            "3",
            "--round",
        ],
    );
    let out = knitgraph(&["decide", "--k", "1", path_str(&round)]);
    assert_eq!(status(&out), 0);
    let witness = stdout_json(&out);
    assert_eq!(witness["meta"]["k"], 1);
    assert_eq!(witness["meta"]["threads"][0].as_array().unwrap().len(), 9);
    let path = dir.path().join("witness.json");
    fs::write(&path, &out.stdout).unwrap();
    let out = knitgraph(&["validate", path_str(&path)]);
    assert_eq!(status(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn decide_witnesses_always_validate() {
    let dir = TempDir::new().unwrap();
    for (rows, cols) in [(2, 2), (3, 5), (4, 3)] {
        let round = gen(
            &dir,
            "r",
            &[
                "--pattern",
                "stockinette",
                "--rows",
                &rows.to_string(),
                "--cols",
                &cols.to_string(),
                "--round",
            ],
        );
        for k in 1..=3 {
            let out = knitgraph(&["decide", "--k", &k.to_string(), path_str(&round)]);
            if status(&out) == 0 {
                let path = dir.path().join("w.json");
                fs::write(&path, &out.stdout).unwrap();
                assert_eq!(status(&knitgraph(&["validate", path_str(&path)])), 0);
            } else {
                assert_eq!(status(&out), 1);
            }
        }
    }
}

#[test]
fn chain_is_not_one_knittable() {
    let dir = TempDir::new().unwrap();
    let chain = chain3(&dir);
    let out = knitgraph(&["decide", "--k", "1", path_str(&chain)]);
    assert_eq!(status(&out), 1);
    let out = knitgraph(&["--json", "decide", "--k", "1", path_str(&chain)]);
    assert_eq!(status(&out), 1);
    assert_eq!(stdout_json(&out)["feasible"], false);
    // a single path still covers it once loops are ignored
    let out = knitgraph(&["--json", "cover", "--min", path_str(&chain)]);
    assert_eq!(stdout_json(&out)["k"], 1);
    assert_eq!(status(&knitgraph(&["cover", path_str(&chain)])), 0);
}

#[test]
fn bad_input_exits_2() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    let out = knitgraph(&["convert", "--to", "dot", path_str(&missing)]);
    assert_eq!(status(&out), 2);
    assert!(!out.stderr.is_empty());
    let out = knitgraph(&["--json", "convert", "--to", "dot", path_str(&missing)]);
    assert_eq!(status(&out), 2);
    assert!(stdout_json(&out)["error"].is_string());

    let out = knitgraph(&["table", "--bogus"]);
    assert_eq!(status(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));

    let broken = dir.path().join("broken.json");
    fs::write(
        &broken,
        r#"{"directed": true, "multigraph": false, "edges": [], "meta": {}}"#,
    )
    .unwrap();
    let out = knitgraph(&["validate", path_str(&broken)]);
    assert_eq!(status(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("`n`"));
}

#[test]
fn oracle_respects_the_cap() {
    let dir = TempDir::new().unwrap();
    let round = gen(
        &dir,
        "round",
        &[
            "--pattern",
            "stockinette",
            "--rows",
            "3",
            "--cols",
            "4",
            "--round",
        ],
    );
    assert_eq!(
        status(&knitgraph(&["oracle", "--k", "1", path_str(&round)])),
        2
    );
    let out = knitgraph(&["oracle", "--k", "1", "--cap", "12", path_str(&round)]);
    assert_eq!(status(&out), 0);
    let chain = chain3(&dir);
    assert_eq!(
        status(&knitgraph(&["oracle", "--k", "1", path_str(&chain)])),
        1
    );
}

#[test]
fn fixtures_classify_as_expected() {
    let dir = TempDir::new().unwrap();
    for (pattern, class) in [
        ("stockinette", "Class0"),
        ("yo", "Class0"),
        ("kfb", "Class0"),
        ("k2tog", "Class0"),
        ("c1b", "Class2"),
        ("brioche", "Class2"),
    ] {
        let path = gen(&dir, pattern, &["--pattern", pattern]);
        let out = knitgraph(&["--json", "classify", path_str(&path)]);
        assert_eq!(status(&out), 0);
        assert_eq!(stdout_json(&out)["class"], class, "{pattern}");
        // brioche stitches are many-to-many, outside the restricted rules
        let want = if pattern == "brioche" { 1 } else { 0 };
        assert_eq!(
            status(&knitgraph(&["yarn", "check", path_str(&path)])),
            want,
            "{pattern}"
        );
    }
}

#[test]
fn rows_cables_and_yarns() {
    let dir = TempDir::new().unwrap();
    let flat = gen(
        &dir,
        "flat",
        &["--pattern", "stockinette", "--rows", "4", "--cols", "5"],
    );
    let out = knitgraph(&["rows", path_str(&flat)]);
    assert_eq!(status(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("4 rows"));

    let c1b = gen(&dir, "c1b", &["--pattern", "c1b"]);
    assert_eq!(status(&knitgraph(&["rows", path_str(&c1b)])), 1);
    let out = knitgraph(&["--json", "cablewidth", path_str(&c1b)]);
    assert_eq!(stdout_json(&out)["cable_width"], 1);

    let brioche = gen(&dir, "brioche", &["--pattern", "brioche", "--cols", "6"]);
    let out = knitgraph(&["--json", "cablewidth", path_str(&brioche)]);
    assert_eq!(stdout_json(&out)["crossings"].as_array().unwrap().len(), 10);
    let out = knitgraph(&["--json", "yarn", "min-k", path_str(&brioche)]);
    let report = stdout_json(&out);
    assert_eq!(report["k"], 4);
    assert_eq!(report["trails"].as_array().unwrap().len(), 4);
}

#[test]
fn table_text_and_json() {
    let out = knitgraph(&["table"]);
    assert_eq!(status(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("S, M, T"));
    let out = knitgraph(&["--json", "table", "--rule", "extended"]);
    let cells = stdout_json(&out)["cells"].as_array().unwrap().clone();
    assert_eq!(cells.len(), 16);
    assert_eq!(status(&knitgraph(&["table", "--rule", "loose"])), 2);
}

#[test]
fn convert_round_trips() {
    let dir = TempDir::new().unwrap();
    let kfb = gen(&dir, "kfb", &["--pattern", "kfb"]);
    let out = knitgraph(&["convert", "--to", "json", path_str(&kfb)]);
    assert_eq!(status(&out), 0);
    assert_eq!(out.stdout, fs::read(&kfb).unwrap());
    let out = knitgraph(&["convert", "--to", "dot", path_str(&kfb)]);
    let dot = String::from_utf8_lossy(&out.stdout);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("color=purple").count(), 2);
}
