//! End-to-end smoke tests of the installed binary.

use std::process::Command;

fn tricon() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tricon"))
}

#[test]
fn solve_m_prints_roots() {
    let out = tricon()
        .args(["solve-m", "--b", "4", "--c", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4 36");
    let out = tricon()
        .args(["solve-m", "--b", "2", "--c", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout).trim(),
        "no integer roots"
    );
}

#[test]
fn represent_prints_decomposition() {
    let out = tricon().args(["represent", "--p", "13"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("x=-3") && text.contains("y=1"), "{text}");
    // Not ≡ 1 (mod 4) is a usage error, not a crash.
    let out = tricon().args(["represent", "--p", "7"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_emits_verdict_json_and_exit_code() {
    let out = tricon()
        .args(["check", "--name", "mortenson", "--p", "11"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let verdict: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("verdict is one JSON object");
    assert_eq!(verdict["check"], "mortenson");
    assert_eq!(verdict["holds"], true);
    // Missing required parameter.
    let out = tricon()
        .args([
            "check", "--name", "t2_m", "--p", "11", "--b", "4", "--c", "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_writes_report_file_and_respects_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let config_path = dir.path().join("sweep.conf");
    let report_path = dir.path().join("report.json");
    std::fs::write(
        &config_path,
        "checks=t2_4_36,mortenson\nprime_min=5\nprime_max=60\nthreads=1\n",
    )
    .unwrap();
    let out = tricon()
        .args([
            "sweep",
            "--config",
            config_path.to_str().unwrap(),
            "--prime-max",
            "50", // flag overrides the file's 60
            "--output",
            report_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(&report_path).unwrap()).unwrap();
    assert_eq!(report["config"]["prime_max"], 50);
    assert_eq!(report["summary"]["fail"], 0);
    let n = report["verdicts"].as_array().unwrap().len();
    // Primes in [5, 50]: 13 of them, two checks each.
    assert_eq!(n, 26);
}

#[test]
fn identity_subcommand_reports_families() {
    let out = tricon()
        .args(["identity", "--name", "clausen_square", "--n-max", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(
        text.contains("clausen_square") && text.contains("all hold"),
        "{text}"
    );
}
