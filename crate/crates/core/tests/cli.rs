use std::process::{Command, Output};

fn qgonal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgonal"))
        .args(args)
        .env_remove("QGONAL_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_text_and_json() {
    let o = qgonal(&["compute", "p", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "42\n");

    let o = qgonal(&["compute", "p", "--n", "10", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "42");
    assert_eq!(v["target"], "p");

    let o = qgonal(&["compute", "gonal", "--g", "7", "--n", "-3"]);
    assert_eq!(stdout(&o), "27\n");
}

#[test]
fn table_csv_rows() {
    let o = qgonal(&["table", "q", "--max-n", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,1\n1,1\n2,1\n3,2\n4,2\n5,3\n6,4\n");
}

#[test]
fn verify_reports_status() {
    let o = qgonal(&["verify", "theorem1", "--g", "9", "--order", "80"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "THEOREM1 g=9 order=80 VERIFIED\n");

    let o = qgonal(&[
        "verify",
        "SIGMA_REC",
        "--m",
        "5",
        "--order",
        "40",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "VERIFIED");
    assert_eq!(v["first_mismatch"], serde_json::Value::Null);
    assert_eq!(v["params"]["m"], 5);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["compute", "p", "--n", "10", "--format", "xml"][..],
        &["compute", "nope", "--n", "3"],
        &["compute", "e-coeff", "--g", "7", "--n", "-3"],
        &["verify", "theorem1", "--order", "5"],
        &["verify", "NOT_AN_ID"],
        &["table", "pprime", "--m", "2", "--max-n", "5"],
        &["frobnicate"],
    ] {
        let o = qgonal(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn bad_thread_count_is_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_qgonal"))
        .args(["verify-all", "--order", "10"])
        .env("QGONAL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_file_and_unwritable_path() {
    let dir = std::env::temp_dir().join(format!("qgonal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sigma.csv");
    let o = qgonal(&[
        "table",
        "sigma",
        "--max-n",
        "4",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,value\n0,0\n1,1\n2,3\n3,4\n4,7\n"
    );

    let bad = dir.join("missing").join("x.txt");
    let o = qgonal(&["compute", "p", "--n", "3", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_all_is_reproducible_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_qgonal"))
            .args(["verify-all", "--order", "60", "--format", "csv"])
            .env("QGONAL_THREADS", threads)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("3");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 1 + 75);
}
