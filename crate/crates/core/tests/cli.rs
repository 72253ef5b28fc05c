use std::process::{Command, Output};

fn lpbounds(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lpbounds"))
        .args(args)
        .env_remove("LPBOUNDS_CACHE_DIR")
        .output()
        .expect("spawn lpbounds")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn quadrature_csv() {
    let o = lpbounds(&["quadrature", "--d", "2", "--N", "6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().count() >= 3, "{text}");
}

#[test]
fn domain_errors_exit_2() {
    let o = lpbounds(&["bounds", "--d", "2", "--s", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("requires s > d"));

    let o = lpbounds(&["theta", "--lattice", "nope", "--m-max", "3"]);
    assert_eq!(o.status.code(), Some(2));

    let o = lpbounds(&["quadrature", "--d", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unreachable_tolerance_exits_3() {
    let o = lpbounds(&["bounds", "--d", "2", "--s", "3", "--tol", "1e-300"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["bounds", "--d", "4", "--s-range", "5:9:1"];
    let a = lpbounds(&args);
    let b = lpbounds(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("d,s,theta,xi,xi_flag,a_sd,tail_bound,terms,c_tilde\n"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn json_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ulb.json");
    let o = lpbounds(&[
        "ulb", "--d", "2", "--N", "6", "--potential", "riesz:4", "--format", "json", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!((v["value"].as_f64().unwrap() - 6.375).abs() < 1e-12);
}

#[test]
fn table_bd_has_nine_rows() {
    let o = lpbounds(&["table-bd"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.contains(",1.00589479,"));
}

#[test]
fn theta_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8.csv");
    let o = lpbounds(&["theta", "--lattice", "e8", "--m-max", "10", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let series = lpbounds::lattice::ThetaSeries::from_csv(&text, lpbounds::lattice::Lattice::E8).unwrap();
    assert_eq!(series.kissing_number().unwrap(), &num_bigint::BigInt::from(240));
}

#[test]
fn cache_dir_is_populated_and_reused() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_lpbounds"))
            .args(["bounds", "--d", "3", "--s", "5"])
            .env("LPBOUNDS_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert!(first.status.success());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, lpbounds(&["bounds", "--d", "3", "--s", "5"]).stdout);
}
