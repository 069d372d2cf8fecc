use std::process::{Command, Output};

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("spawn verify")
}

#[test]
fn obstructed_prime_exits_zero_with_json() {
    let out = verify(&["--prime", "5", "--ell", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema_version"], "1.0.0");
    assert_eq!(v["prime"], 5);
    assert_eq!(v["overall"], "obstructed");
    assert_eq!(v["verdict"]["fs_indicator"], -1);
    assert!(v.get("timings_ms").is_none());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--prime", "4"][..],
        &["--prime", "3"],
        &["--prime", "17"],
        &["--prime", "5", "--ell", "5"],
        &["--prime", "5", "--precision", "0"],
        &["--prime", "5", "--format", "yaml"],
        &[],
    ] {
        let out = verify(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn max_prime_raises_the_cap() {
    let out = verify(&["--prime", "17", "--max-prime", "17", "--ell", "3", "--ell-bound", "1"]);
    assert_ne!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn markdown_to_file() {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.md");
    let out = verify(&["--prime", "7", "--format", "markdown", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let md = std::fs::read_to_string(&path).unwrap();
    assert!(md.contains("✓"));
    assert!(!md.contains("✗"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn same_seed_same_bytes() {
    let a = verify(&["--prime", "5", "--ell", "3", "--seed", "9"]);
    let b = verify(&["--prime", "5", "--ell", "3", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}
