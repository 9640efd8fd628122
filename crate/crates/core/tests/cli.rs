use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weilmot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn count_projective_plane() {
    let out = run(&["count", "--variety", &data("p2.json"), "--q", "2", "--upto", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["schema"], "weilmot.report/1");
    assert_eq!(ints(&r["results"]["counts"]), vec![7, 21, 73]);
    assert_eq!(r["assertions"]["ch0_trivial"], true);
    assert_eq!(r["verdicts"][0]["pass"], true);
}

#[test]
fn count_elliptic_curve() {
    let out = run(&["count", "--variety", &data("elliptic.json"), "--q", "2", "--upto", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(ints(&report(&out)["results"]["counts"]), vec![3, 9, 9, 9]);
}

#[test]
fn malformed_polynomial_reports_position() {
    let out = run(&["count", "--variety", &data("malformed.json"), "--q", "2", "--upto", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 6, column 29"), "{err}");
}

#[test]
fn input_errors_exit_2() {
    let cases: [&[&str]; 4] = [
        &["count", "--variety", &data("p2.json"), "--q", "6", "--upto", "1"],
        &["count", "--variety", &data("missing.json"), "--q", "2", "--upto", "1"],
        &["count", "--variety", &data("p2.json"), "--q", "2"],
        &["motive", "--spectrum", &data("p2.json"), "zeta"],
    ];
    for args in cases {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn caps_exit_3() {
    let out = run(&["count", "--variety", &data("fermat_cubic.json"), "--q", "5", "--upto", "8"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn congruence_exit_codes() {
    let pass = run(&[
        "congruence", "--a", &data("p2.json"), "--b", &data("blowup_p2.json"), "--q", "3", "--upto", "2",
    ]);
    assert_eq!(pass.status.code(), Some(0));
    let rows = &report(&pass)["results"]["rows"];
    assert_eq!(rows[0]["diff"], -3);
    assert_eq!(rows[1]["diff"], -9);

    let fail = run(&[
        "congruence", "--a", &data("elliptic.json"), "--b", &data("p1.json"), "--q", "2", "--upto", "4",
    ]);
    assert_eq!(fail.status.code(), Some(1));
    let r = report(&fail);
    assert_eq!(r["results"]["first_failure"], 4);
    assert_eq!(r["results"]["rows"][3]["diff"], -8);
    assert_eq!(r["results"]["rows"][3]["residue"], 8);

    let same = run(&[
        "congruence", "--a", &data("elliptic.json"), "--b", &data("elliptic.json"), "--q", "2", "--upto", "3",
    ]);
    assert_eq!(same.status.code(), Some(0));
}

#[test]
fn zeta_of_the_elliptic_curve() {
    let out = run(&[
        "zeta", "--variety", &data("elliptic.json"), "--q", "2", "--upto", "6", "--max-deg", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(ints(&r["results"]["zeta"]["num"]), vec![1, 0, 2]);
    assert_eq!(ints(&r["results"]["zeta"]["den"]), vec![1, -3, 2]);
    assert_eq!(r["results"]["spectrum_text"], "[x - 1] + [x - 2] - [x^2 + 2]");
    assert!(r["verdicts"].as_array().unwrap().iter().all(|v| v["pass"] == true));
}

#[test]
fn zeta_auto_degree() {
    let out = run(&["zeta", "--variety", &data("p2.json"), "--q", "3", "--upto", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out)["results"]["spectrum_text"], "[x - 1] + [x - 3] + [x - 9]");
    let quadric = run(&["zeta", "--variety", &data("quadric.json"), "--q", "2", "--upto", "4", "--max-deg", "1"]);
    assert_eq!(quadric.status.code(), Some(2));
    let short = run(&["zeta", "--variety", &data("elliptic.json"), "--q", "2", "--upto", "3"]);
    assert_eq!(short.status.code(), Some(2));
}

#[test]
fn motive_operations() {
    let l = run(&["motive", "--spectrum", &data("lefschetz.json"), "sharp", "--n", "3"]);
    assert_eq!(l.status.code(), Some(0));
    assert_eq!(report(&l)["results"]["sharp"], 8);

    let an = run(&["motive", "--spectrum", &data("elliptic_spectrum.json"), "an", "--upto", "4"]);
    assert_eq!(an.status.code(), Some(0));
    let r = report(&an);
    assert_eq!(ints(&r["results"]["a_n"]), vec![1, 5, 1, -7]);
    assert_eq!(ints(&r["results"]["reduced"]), vec![1, 1, 1, 9]);

    let split = run(&["motive", "--spectrum", &data("elliptic_spectrum.json"), "split"]);
    assert_eq!(split.status.code(), Some(0));
    let r = report(&split);
    assert_eq!(r["results"]["birational_text"], "[x - 1] - [x^2 + 2]");
    assert_eq!(r["results"]["cofactor_text"], "[x - 1]");

    let z = run(&["motive", "--spectrum", &data("elliptic_spectrum.json"), "zeta"]);
    assert_eq!(report(&z)["results"]["zeta_text"], "(1 + 2t^2) / (1 - 3t + 2t^2)");

    let probe = run(&["motive", "--spectrum", &data("half.json"), "effectivity"]);
    assert_eq!(probe.status.code(), Some(0));
    let r = report(&probe);
    assert_eq!(r["results"]["probe"]["verdict"], "witness");
    assert_eq!(r["results"]["probe"]["n"], 1);

    let bar = run(&["motive", "--spectrum", &data("half.json"), "sharp-bar", "--n", "1"]);
    assert_eq!(bar.status.code(), Some(4));
    let an = run(&["motive", "--spectrum", &data("half.json"), "an", "--upto", "2"]);
    assert_eq!(an.status.code(), Some(4));
}

#[test]
fn reports_are_byte_identical_across_runs_and_threads() {
    let base = ["count", "--variety", &data("fermat_cubic.json"), "--q", "4", "--upto", "2"];
    let first = run(&base);
    assert_eq!(first.status.code(), Some(0));
    for threads in ["1", "2", "4"] {
        let mut args = base.to_vec();
        args.extend(["--threads", threads]);
        assert_eq!(run(&args).stdout, first.stdout);
    }
    assert_eq!(run(&base).stdout, first.stdout);
}
