use std::process::{Command, Output};

fn beck(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beck"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn xi_trace_is_json_ending_in_the_image() {
    let out = beck(&[
        "bijection",
        "--map",
        "xi",
        "--r",
        "5",
        "--partition",
        "22,19,15,15,13,10,6,5,2",
        "--trace",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let trace: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(trace["output"], serde_json::json!([32, 24, 23, 16, 12]));
    for field in [
        "mu",
        "nu",
        "alpha",
        "beta",
        "u",
        "v",
        "alpha_star",
        "beta_star",
        "sigma",
    ] {
        assert!(trace.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn count_small_family() {
    let out = beck(&["count", "--family", "O1r", "--r", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "4");
}

#[test]
fn verify_trivial_grid_passes() {
    let out = beck(&["verify", "beck3", "--r", "3", "--t", "2", "--n-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_csv_has_fixed_header() {
    let out = beck(&[
        "verify", "glaisher", "--r", "2-3", "--n-max", "6", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,r,t,lhs,rhs,status"));
    assert_eq!(lines.count(), 2 * 2 * 7);
}

#[test]
fn verify_json_is_stable_apart_from_timing() {
    let run = || {
        let out = beck(&[
            "verify", "beck1", "--r", "2,4", "--n-max", "8", "--format", "json",
        ]);
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = run();
    assert_eq!(a, run());
    assert_eq!(a["summary"]["failed"], 0);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "beck3", "--r", "3", "--t", "3", "--n-max", "2"][..],
        &["bijection", "--map", "xi", "--r", "5", "--partition", "3,x"],
        &["count", "--family", "nope", "--n", "3"],
        &["frobnicate"],
        &["series", "--name", "Ert", "--r", "3", "--degree", "4"],
    ] {
        assert_eq!(beck(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn decorated_inputs() {
    let out = beck(&[
        "bijection",
        "--map",
        "psi1",
        "--r",
        "3",
        "--t",
        "2",
        "--partition",
        "4,3,1",
        "--overline-position",
        "2",
    ]);
    assert_eq!(stdout(&out).trim(), "((2,1,1),(2^2))");
    let out = beck(&[
        "bijection",
        "--map",
        "psi2-inv",
        "--r",
        "5",
        "--t",
        "2",
        "--partition",
        "22,19,15,15,13,10,6,5,2",
        "--rect",
        "7^2",
    ]);
    assert_eq!(stdout(&out).trim(), "32,24,23,16,12,7,7*");
    // 3 is not the last 3 in (4,3,3), so it cannot carry an overline.
    let out = beck(&[
        "bijection",
        "--map",
        "psi1",
        "--r",
        "3",
        "--t",
        "2",
        "--partition",
        "4,3,3",
        "--overline-position",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn diagram_and_series_dump() {
    let out = beck(&["diagram", "--r", "4", "--partition", "10,7,7,5,4,3"]);
    assert_eq!(stdout(&out), "4 4 2\n4 3\n4 3\n4 1\n4\n3\n");
    let out = beck(&["series", "--name", "Or", "--r", "2", "--degree", "4"]);
    assert_eq!(stdout(&out), "0\t1\n1\t1\n2\t1\n3\t2\n4\t2\n");
}
