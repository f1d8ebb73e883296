//! End-to-end CLI tests, including byte-for-byte golden output locks.

use std::path::PathBuf;
use std::process::{Command, Output};

fn kschur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kschur(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn check_golden(name: &str, actual: &str) {
    let path = golden_path(name);
    if std::env::var("BLESS").is_ok() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file {name}; run with BLESS=1"));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

#[test]
fn kschur_appendix_latex_golden() {
    let out = stdout(&["kschur", "--k", "2", "--lambda", "2,2,1", "--format", "latex"]);
    check_golden("kschur_221_latex.txt", &out);
}

#[test]
fn kschur_bandwidth_is_single_schur() {
    let out = stdout(&[
        "kschur", "--k", "5", "--lambda", "3", "--basis", "schur", "--format", "latex",
    ]);
    assert_eq!(out.trim(), "s^{(5)}_{(3)} = s_{(3)}");
}

#[test]
fn kschur_modified_staircase() {
    let out = stdout(&[
        "kschur", "--k", "1", "--lambda", "1,1,1", "--modified", "--basis", "qsym",
    ]);
    check_golden("kschur_modified_111.txt", &out);
}

#[test]
fn deg_build_dot_golden() {
    let out = stdout(&["deg", "build", "--n", "3", "--shape", "5,3,1", "--format", "dot"]);
    assert_eq!(out.matches("label=\"").count(), 30 + 30); // 30 vertices + 30 edges
    check_golden("deg_531.dot", &out);
}

#[test]
fn deg_verify_pass_and_fail_exit_codes() {
    let ok = kschur(&[
        "deg", "verify", "--n", "3", "--shape", "5,3,1", "--axioms", "1,2,3,5", "--lsp", "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
    // the rank-5 staircase graph genuinely fails axiom 4: exit code 1
    let fail = kschur(&["deg", "verify", "--n", "2", "--shape", "5,4,3,2,1", "--axioms", "4"]);
    assert_eq!(fail.status.code(), Some(1));
    // but it is a D-graph with LSP_2
    let ok = kschur(&[
        "deg", "verify", "--n", "2", "--shape", "5,4,3,2,1", "--axioms", "1,2,3,5", "--lsp", "2",
    ]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn deg_classify_rank4_shows_seven_types() {
    let out = stdout(&["deg", "classify", "--rank", "4", "--max-n", "4", "--max-count", "200"]);
    assert!(out.contains("7 distinct component isomorphism types"), "{out}");
    for ty in [
        "IsolatedPlus",
        "IsolatedMinus",
        "Path2RowType",
        "Path2ColumnType",
        "DoubleEdge",
        "Path4RowType",
        "Path4ColumnType",
    ] {
        assert!(out.contains(ty), "missing {ty} in census output");
    }
}

#[test]
fn sst_enumeration_golden() {
    let out = stdout(&["sst", "--n", "3", "--shape", "2,2,1,1"]);
    check_golden("sst_2211.txt", &out);
}

#[test]
fn identities_all_pass() {
    let out = kschur(&["identities", "--staircase", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let out = kschur(&["identities", "--hag-llt", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let out = kschur(&["identities", "--bandwidth", "--k", "3", "--lambda", "2,1"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    let out = kschur(&["kschur", "--k", "2", "--lambda", "5,3"]);
    assert_eq!(out.status.code(), Some(2), "non-k-bounded shape is a usage error");
    let out = kschur(&["identities"]);
    assert_eq!(out.status.code(), Some(2));
    let out = kschur(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn flatten_and_clone_examples() {
    let out = stdout(&["flatten", "--n", "4", "--lambda", "7,4,4,2,2", "--rod", "2"]);
    assert!(out.contains("(6,4,2)"));
    let out = stdout(&["clone", "--n", "4", "--lambda", "5,2,2", "--index", "0"]);
    assert!(out.contains("(7,4,4,2,2)"));
    // squash inverts at the reported index
    let out = stdout(&["clone", "--n", "4", "--lambda", "7,4,4,2,2", "--index=-2", "--squash"]);
    assert!(out.contains("(5,2,2)"), "{out}");
}

#[test]
fn poset_interval_dot_golden() {
    let out = stdout(&["poset", "interval", "--n", "3", "--upper", "5,3,1", "--format", "dot"]);
    assert!(out.contains("1,t,t^2"), "spin edge labels present");
    check_golden("interval_531.dot", &out);
}

#[test]
fn macdonald_symmetric_and_golden() {
    let out = stdout(&["macdonald", "--mu", "3,1", "--format", "latex"]);
    check_golden("macdonald_31_latex.txt", &out);
}

#[test]
fn sst_json_surfaces() {
    // SST wire format round-trips through flatten: the column tableau as a
    // 6-core leaves rod 2 untouched
    let sst = r#"{"n":6,"chain":[[],[1],[1,1],[1,1,1],[1,1,1,1]],"c_star":[0,-1,-2,-3]}"#;
    let out = stdout(&["flatten", "--n", "6", "--rod", "2", "--sst-json", sst]);
    assert!(out.contains("preserved: true"), "{out}");
    let out = stdout(&["sst", "--n", "3", "--shape", "2,2,1,1", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 6);
    assert_eq!(rows[0]["spin"], 0);
    assert_eq!(rows[0]["signature"], "---");
}

#[test]
fn config_file_sets_format() {
    let dir = std::env::temp_dir().join("kschur-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("config.toml");
    std::fs::write(&cfg, "format = \"json\"\nthreads = 1\n").unwrap();
    let out = stdout(&[
        "--config",
        cfg.to_str().unwrap(),
        "kschur",
        "--k",
        "2",
        "--lambda",
        "2,2,1",
        "--basis",
        "qsym",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"], "qsym");
    assert_eq!(v["degree"], 5);
}

#[test]
fn out_file_flag() {
    let dir = std::env::temp_dir().join("kschur-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.dot");
    let _ = stdout(&[
        "--out",
        path.to_str().unwrap(),
        "deg",
        "build",
        "--n",
        "3",
        "--shape",
        "2,2,1,1",
        "--format",
        "dot",
    ]);
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("graph deg {"));
}
