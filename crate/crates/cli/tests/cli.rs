use std::process::{Command, Output};

fn corepath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corepath"))
        .args(args)
        .env_remove("COREPATH_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn map_round_trip() {
    let o = corepath(&["map", "phi", "fduduufdfduufdff"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("output: ffuduufdfdufuddf (m=10, r=6, k=2)"));

    let o = corepath(&["--format", "json", "map", "psi", "ffuduufdfdufuddf"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["output"], "fduduufdfduufdff");
    assert_eq!(v["m"], 10);
    assert_eq!(v["r"], 6);
    assert_eq!(v["k"], 2);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["map", "psi", "d"][..],
        &["map", "phi", "uu"],
        &["map", "phi", "fxu"],
        &["convert", "--t", "3", "--from", "partition", "3"],
        &[
            "convert",
            "--t",
            "4",
            "--from",
            "partition",
            "3,1",
            "--self-conjugate",
        ],
        &["count", "narayana", "--n", "3", "--k", "0"],
    ] {
        let o = corepath(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).starts_with("error: "), "{args:?}");
    }
    let o = corepath(&["map", "psi", "d"]);
    assert!(stderr(&o).contains("NotMotzkinPrefix"));
}

#[test]
fn convert_outputs_every_representation() {
    let o = corepath(&[
        "--format",
        "json",
        "convert",
        "--t",
        "4",
        "--from",
        "partition",
        "4,4,2,2",
    ]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"partition":"4,4,2,2","sequence":[0,0,2,2],"path":"fuuffdd","t":4,"corners":2,"k_min":2}"#
    );
    let o = corepath(&[
        "--format", "json", "convert", "--t", "4", "--from", "path", "fuuffdd",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["partition"], "4,4,2,2");

    let o = corepath(&[
        "--format",
        "json",
        "convert",
        "--t",
        "5",
        "--from",
        "symmetric",
        "uuuffffddd",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["partition"], "7,7,4,4,2,2,2");
}

#[test]
fn count_formats() {
    let o = corepath(&["count", "cc", "--t", "2..3", "--m", "0..3"]);
    assert_eq!(stdout(&o), "t\\m 0 1 2 3\n  2 1 1 1 1\n  3 1 3 5 7\n");

    let o = corepath(&[
        "--format", "csv", "count", "cc", "--t", "2..3", "--m", "0..3",
    ]);
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let rows: Vec<Vec<String>> = rdr
        .records()
        .map(|r| r.unwrap().iter().map(String::from).collect())
        .collect();
    assert_eq!(rows[1], ["3", "1", "3", "5", "7"]);

    let o = corepath(&["--format", "json", "count", "cc", "--t", "40", "--m", "30"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cell = v["cells"][0][0].as_str().unwrap();
    assert!(cell.len() > 20, "{cell}");

    let o = corepath(&["count", "cc", "--paper-tables"]);
    assert!(o.status.success());
}

#[test]
fn enumerate_respects_the_cap() {
    let o = corepath(&[
        "enumerate",
        "--family",
        "mbar",
        "--m",
        "30",
        "--r",
        "30",
        "--k",
        "30",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CapExceeded"));

    let o = corepath(&[
        "enumerate",
        "--family",
        "mbar",
        "--m",
        "30",
        "--r",
        "30",
        "--k",
        "30",
        "--count-only",
    ]);
    assert!(o.status.success());

    let o = Command::new(env!("CARGO_BIN_EXE_corepath"))
        .args([
            "enumerate",
            "--family",
            "cornerless",
            "--len",
            "7",
            "--flats",
            "3",
        ])
        .env("COREPATH_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = corepath(&[
        "enumerate",
        "--family",
        "cornerless",
        "--len",
        "7",
        "--flats",
        "3",
    ]);
    assert_eq!(stdout(&o).lines().count(), 16);
}

#[test]
fn verify_is_deterministic_across_worker_counts() {
    let one = corepath(&[
        "--format",
        "json",
        "verify",
        "all",
        "--max-size",
        "7",
        "--workers",
        "1",
    ]);
    let four = corepath(&[
        "--format",
        "json",
        "verify",
        "all",
        "--max-size",
        "7",
        "--workers",
        "4",
    ]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let again = corepath(&[
        "--format",
        "json",
        "verify",
        "all",
        "--max-size",
        "7",
        "--workers",
        "4",
    ]);
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn verify_plain_report() {
    let o = corepath(&["verify", "runs", "--max-size", "6"]);
    let out = stdout(&o);
    assert!(out.starts_with("== runs ==\n"));
    assert!(out.contains("PASS  |run difference| <= 1 [412 checks]"));
    assert!(out.ends_with("overall: PASS\n"));
}

#[test]
fn injected_mutation_fails_verification() {
    let o = corepath(&[
        "verify",
        "bijection",
        "--max-size",
        "6",
        "--inject-mutation",
        "case1-ii",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}
