// SPDX-License-Identifier: MIT OR Apache-2.0

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gini(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gini"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn here(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(rel)
}

fn fixture() -> String {
    here("fixtures/two_species.csv").display().to_string()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(args: &[&str]) -> i32 {
    gini(args).status.code().unwrap()
}

fn golden(name: &str) -> Vec<u8> {
    std::fs::read(here(&format!("golden/{name}"))).unwrap()
}

#[test]
fn mean_examples() {
    assert_eq!(
        stdout(&gini(&["mean", "1", "2", "3", "--p", "2", "--q", "1"])),
        "2.3333333333333335\n"
    );
    assert_eq!(
        stdout(&gini(&["mean", "1", "7", "--p", "2", "--q", "0"])),
        "5\n"
    );
    assert_eq!(
        stdout(&gini(&["mean", "1", "2", "--p", "1", "--q", "1"])),
        "1.5874010519681996\n"
    );
    assert_eq!(
        stdout(&gini(&["mean", "1", "2", "--r", "-1"])),
        "1.3333333333333333\n"
    );
    assert_eq!(
        stdout(&gini(&["mean", "1", "2", "3", "--lehmer", "2"])),
        "2.3333333333333335\n"
    );
}

#[test]
fn mean_reads_distribution_files() {
    let out = gini(&["mean", "--input", &fixture(), "--p", "2", "--q", "1"]);
    assert_eq!(stdout(&out), "250\n");
}

#[test]
fn power_mean_and_gini_with_zero_print_the_same_bytes() {
    for p in ["2", "-1", "0", "1e-9", "-3.5", "0.5", "37", "-100"] {
        let a = gini(&["mean", "0.3", "2", "17", "1e-4", "--p", p, "--q", "0"]);
        let b = gini(&["mean", "0.3", "2", "17", "1e-4", "--r", p]);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "p = {p}");
    }
}

#[test]
fn report_goldens() {
    let f = fixture();
    assert_eq!(
        gini(&["mwd-report", "--input", &f]).stdout,
        golden("report.txt")
    );
    assert_eq!(
        gini(&["mwd-report", "--input", &f, "--format", "json"]).stdout,
        golden("report.json")
    );
    let b = gini(&[
        "report", "--input", &f, "--format", "json", "--b", "0.3", "--custom", "1.5:-1.5",
    ]);
    assert_eq!(b.stdout, golden("report_b.json"));
}

#[test]
fn report_written_to_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.txt");
    assert_eq!(
        code(&[
            "mwd-report",
            "--input",
            &fixture(),
            "--out",
            out.to_str().unwrap()
        ]),
        0
    );
    assert_eq!(std::fs::read(out).unwrap(), golden("report.txt"));
}

#[test]
fn single_species_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.csv");
    std::fs::write(&path, "molar_mass,abundance\n5000,2\n").unwrap();
    let text = stdout(&gini(&["mwd-report", "--input", path.to_str().unwrap()]));
    for key in ["Mn", "Mw", "Mz"] {
        assert!(
            text.lines()
                .any(|l| l.starts_with(key) && l.ends_with(" 5000")),
            "{text}"
        );
    }
    assert!(text
        .lines()
        .any(|l| l.starts_with("pdi") && l.ends_with(" 1")));
}

#[test]
fn plot_goldens_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["plot.svg", "plot.csv"] {
        let out = dir.path().join(name);
        for _ in 0..2 {
            assert_eq!(
                code(&[
                    "plot",
                    "--input",
                    &fixture(),
                    "--out",
                    out.to_str().unwrap()
                ]),
                0
            );
            assert_eq!(std::fs::read(&out).unwrap(), golden(name), "{name}");
        }
    }
}

#[test]
fn plot_without_marks_is_histogram_only() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bare.svg");
    assert_eq!(
        code(&[
            "plot",
            "--input",
            &fixture(),
            "--out",
            out.to_str().unwrap(),
            "--marks",
            ""
        ]),
        0
    );
    let svg = std::fs::read_to_string(out).unwrap();
    assert!(svg.contains("class=\"bin\""));
    assert!(!svg.contains("class=\"mark\""));
}

#[test]
fn generate_flory_round_trips_through_report() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["f.csv", "f.json"] {
        let out = dir.path().join(name);
        assert_eq!(
            code(&[
                "generate",
                "flory",
                "--m0",
                "100",
                "--x",
                "0.5",
                "--out",
                out.to_str().unwrap()
            ]),
            0
        );
        let text = stdout(&gini(&["mwd-report", "--input", out.to_str().unwrap()]));
        let mn: f64 = text
            .lines()
            .find(|l| l.starts_with("Mn"))
            .unwrap()
            .split_whitespace()
            .nth(1)
            .unwrap()
            .parse()
            .unwrap();
        assert!((mn - 200.0).abs() / 200.0 < 1e-9);
    }
    let a = gini(&["generate", "poisson", "--mean-degree", "50"]);
    let b = gini(&["generate", "poisson", "--mean-degree", "50"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn generate_monodisperse_lognormal() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l.csv");
    let args = [
        "generate",
        "lognormal",
        "--median",
        "1e4",
        "--sigma",
        "0",
        "--n",
        "5",
        "--out",
        out.to_str().unwrap(),
    ];
    assert_eq!(code(&args), 0);
    let text = stdout(&gini(&["mwd-report", "--input", out.to_str().unwrap()]));
    assert!(text
        .lines()
        .any(|l| l.starts_with("pdi") && l.ends_with(" 1")));
}

#[test]
fn verify_passes_on_random_and_uniform_data() {
    let out = gini(&["verify", "--random", "42", "1000", "--grid", "default"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("checks 7000 held 7000 degenerate 0 failed 0\n"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.csv");
    std::fs::write(&path, "molar_mass,abundance\n7,1\n7,3\n").unwrap();
    let out = gini(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("checks 7 held 0 degenerate 7 failed 0\n"));
}

#[test]
fn verify_writes_a_json_report_with_oracle_summary() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("v.json");
    let out = gini(&[
        "verify",
        "--input",
        &fixture(),
        "--grid",
        "1:0,2:0,2:1",
        "--oracle",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&std::fs::read(report).unwrap()).unwrap();
    assert_eq!(json["checks"], 2);
    assert_eq!(json["failed"], 0);
    assert_eq!(json["oracle"]["passed"], true);
}

#[test]
fn failed_verification_exits_with_three() {
    let out = gini(&[
        "verify",
        "--random",
        "42",
        "20",
        "--oracle",
        "--rel-tol",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).trim_end().ends_with("FAIL"));
}

#[test]
fn usage_errors_exit_with_two() {
    let f = fixture();
    let cases: &[&[&str]] = &[
        &["frobnicate"],
        &["mean", "1", "2"],
        &["mean", "1", "2", "--r", "1", "--lehmer", "2"],
        &["mean", "1", "2", "--p", "1"],
        &["mean", "1", "2", "--r", "abc"],
        &["mean", "1", "2", "--p", "inf", "--q", "0"],
        &["mean", "--r", "1"],
        &["mwd-report", "--input", &f, "--s", "3"],
        &["mwd-report", "--input", &f, "--b", "1.5"],
        &["mwd-report", "--input", &f, "--custom", "1"],
        &["mwd-report", "--input", &f, "--format", "xml"],
        &["verify", "--random", "1", "3", "--grid", "2:0,1:0"],
        &["verify", "--random", "1"],
        &["verify"],
        &[
            "verify",
            "--random",
            "1",
            "3",
            "--oracle",
            "--rel-tol",
            "-1",
        ],
        &["generate", "flory", "--x", "1.5"],
        &["generate", "lognormal", "--median", "1e4", "--sigma", "-1"],
        &["generate", "poisson", "--mean-degree", "0"],
        &["plot", "--input", &f, "--out", "x.png"],
        &["plot", "--input", &f, "--out", "x.svg", "--marks", "Mq"],
        &["plot", "--input", &f, "--out", "x.svg", "--s", "0"],
    ];
    for args in cases {
        assert_eq!(code(args), 2, "{args:?}");
    }
}

#[test]
fn data_errors_exit_with_one_and_leave_no_output() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.display().to_string()
    };
    let zero = write("zero.csv", "molar_mass,abundance\n100,1\n300,0\n");
    let header = write("header.csv", "mass,n\n100,1\n");
    let text = write("text.csv", "molar_mass,abundance\n100,x\n");
    let empty = write("empty.csv", "molar_mass,abundance\n");
    let json = write("bad.json", "{\"species\": [");
    let missing = dir.path().join("missing.csv").display().to_string();
    let out = dir.path().join("out.svg");
    let out_s = out.to_str().unwrap();
    let report_out = dir.path().join("report.txt");
    let cases: Vec<Vec<&str>> = vec![
        vec!["mean", "-1", "2", "--r", "1"],
        vec!["mean", "0", "2", "--p", "1", "--q", "0"],
        vec!["mean", "--input", &missing, "--r", "1"],
        vec![
            "mwd-report",
            "--input",
            &zero,
            "--out",
            report_out.to_str().unwrap(),
        ],
        vec!["mwd-report", "--input", &header],
        vec!["mwd-report", "--input", &text],
        vec!["mwd-report", "--input", &empty],
        vec!["mwd-report", "--input", &json],
        vec!["verify", "--input", &zero],
        vec!["plot", "--input", &zero, "--out", out_s],
        vec!["plot", "--input", &missing, "--out", out_s],
    ];
    for args in &cases {
        assert_eq!(code(args), 1, "{args:?}");
    }
    assert!(!out.exists());
    assert!(!report_out.exists());
    let err = String::from_utf8(gini(&["mwd-report", "--input", &zero]).stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn parsing_ignores_locale() {
    let out = Command::new(env!("CARGO_BIN_EXE_gini"))
        .args(["mean", "1.5", "2.5", "--r", "1"])
        .env("LC_ALL", "de_DE.UTF-8")
        .env("LC_NUMERIC", "de_DE.UTF-8")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "2\n");
}
