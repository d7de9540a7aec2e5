use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use centaut::corpus::{Corpus, PRINTED_PAPER_FIXTURE};

fn centaut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centaut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Map<String, serde_json::Value>> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("one JSON object per line"))
        .collect()
}

/// A built-in presentation under a new name.
fn renamed(name: &str, new_name: &str) -> String {
    let text = Corpus::builtin()
        .get(name)
        .unwrap()
        .presentation
        .to_file_format();
    text.replacen(&format!("group {name}"), &format!("group {new_name}"), 1)
}

fn write(dir: &Path, file: &str, text: &str) -> String {
    let path = dir.join(file);
    fs::write(&path, text).unwrap();
    path.display().to_string()
}

#[test]
fn analyze_paper_group_json() {
    let out = centaut(&["analyze", "paper-3^7", "--oracle", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 1);
    let r = &rows[0];
    assert_eq!(r["order"], "2187");
    assert_eq!(r["center_type"], "[2]");
    assert_eq!(r["centz_formula"], "9");
    assert_eq!(r["oracle_autcentz"], "9");
    assert_eq!(r["oracle_autcent"], "27");
    assert_eq!(r["condition"], "true");
    assert_eq!(r["theorem_status"], "consistent");
}

#[test]
fn analyze_abelian_and_table_output() {
    let out = centaut(&["analyze", "c5", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["abelian"], "true");
    assert_eq!(r["condition"], "false");
    assert_eq!(r["condition_applicable"], "false");

    let out = centaut(&["analyze", "dihedral-16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("name") && l.ends_with("dihedral-16")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("condition ") && l.ends_with("false")));
}

#[test]
fn analyze_file_target() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(
        dir.path(),
        "x.pcg",
        &renamed("extraspecial-27-exp3", "heis"),
    );
    let out = centaut(&["analyze", &path, "--json", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["name"], "heis");
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let printed = write(dir.path(), "broken.pcg", PRINTED_PAPER_FIXTURE);
    let out = centaut(&["analyze", &printed]);
    assert_eq!(out.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&out.stderr).contains("consistency"));

    let garbage = write(
        dir.path(),
        "garbage.pcg",
        "group x\nprime 3\nngens 2\npow 1 0 1\nend\n",
    );
    assert_eq!(centaut(&["analyze", &garbage]).status.code(), Some(4));
    assert_eq!(
        centaut(&["analyze", "no/such/file.pcg"]).status.code(),
        Some(3)
    );
    assert_eq!(
        centaut(&["analyze", "no-such-group"]).status.code(),
        Some(3)
    );
    assert_eq!(centaut(&["consistency", &printed]).status.code(), Some(5));
}

#[test]
fn consistency_verb() {
    let out = centaut(&["consistency", "paper-3^7", "c5", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out).len(), 2);
    let dir = tempfile::tempdir().unwrap();
    let printed = write(dir.path(), "printed.pcg", PRINTED_PAPER_FIXTURE);
    let out = centaut(&["consistency", &printed]);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn audit_builtin_corpus() {
    let out = centaut(&["audit", "--json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let rows = json_lines(&out);
    let last = rows.last().unwrap();
    assert_eq!(last["groups"], "15");
    assert_eq!(last["violations"], "0");
    assert!(rows
        .iter()
        .any(|r| r.get("statement").is_some_and(|s| s == "theorem:order-p7")));
}

#[test]
fn audit_empty_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = centaut(&["audit", "--json", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out).last().unwrap()["groups"], "0");
}

#[test]
fn audit_imported_directory() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "a.pcg", &renamed("class3-729", "imported-729"));
    write(
        dir.path(),
        "b.pcg",
        &renamed("coclass2-243-a", "imported-243"),
    );
    let d = dir.path().to_str().unwrap();
    let out = centaut(&["audit", "--json", d]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let last = json_lines(&out).last().unwrap().clone();
    assert_eq!(last["groups"], "2");
    assert_eq!(last["violations"], "0");

    let out = centaut(&["audit", "--json", "--with-corpus", d]);
    assert_eq!(json_lines(&out).last().unwrap()["groups"], "17");

    // a broken file is reported without hiding the others
    write(dir.path(), "c.pcg", PRINTED_PAPER_FIXTURE);
    let out = centaut(&["audit", "--json", d]);
    assert_eq!(out.status.code(), Some(5));
    let last = json_lines(&out).last().unwrap().clone();
    assert_eq!(last["groups"], "2");
    assert_eq!(last["errors"], "1");
}

#[test]
fn verify_builtin_corpus() {
    let out = centaut(&["verify", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert_eq!(rows.last().unwrap()["mismatches"], "0");
    let paper = rows.iter().find(|r| r["name"] == "paper-3^7").unwrap();
    assert_eq!(paper["centz_formula"], "9");
    assert_eq!(paper["centz_oracle"], "9");
    assert_eq!(paper["cent_formula"], "27");
    assert_eq!(paper["cent_oracle"], "27");
    assert_eq!(paper["status"], "ok");
}

#[test]
fn verify_reports_skips_under_tight_budget() {
    let out = centaut(&["verify", "--json", "--budget-homs", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    let paper = rows.iter().find(|r| r["name"] == "paper-3^7").unwrap();
    assert!(paper["status"].as_str().unwrap().starts_with("skipped"));
}

#[test]
fn sequential_and_parallel_output_identical() {
    for args in [
        vec!["audit", "--json"],
        vec!["verify", "--json"],
        vec!["analyze", "paper-3^7", "class3-729", "--oracle", "--json"],
    ] {
        let par = centaut(&args);
        let mut seq_args = args.clone();
        seq_args.push("--sequential");
        let seq = centaut(&seq_args);
        assert_eq!(par.stdout, seq.stdout, "{args:?}");
        assert_eq!(par.status.code(), seq.status.code());
    }
}

#[test]
fn list_shows_corpus() {
    let out = centaut(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 15);
    assert!(stdout(&out).contains("paper-3^7"));
}
