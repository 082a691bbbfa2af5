use std::process::{Command, Output};

use liecurv::Scalar;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecurv")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn operator_fixtures_byte_identical() {
    for name in ["nikonorov5", "nikonorov4"] {
        let got = stdout(&["operator", name, "--display-order", "--format", "json"]);
        assert_eq!(got, fixture(&format!("{name}_operator.json")), "{name}");
    }
}

#[test]
fn json_round_trip() {
    for args in [
        &["report", "nikonorov4", "--all", "--format", "json"][..],
        &["report", "nikonorov4", "--all", "--format", "json", "--float"][..],
        &["obstruction", "nikonorov5", "--format", "json"][..],
    ] {
        let text = stdout(args);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text, "{args:?}");
    }
}

/// Walk both trees; every exact numeric string must agree with its float twin.
fn compare(exact: &Value, float: &Value, path: &str, count: &mut usize) {
    match (exact, float) {
        (Value::String(s), Value::Number(n)) => {
            let x: Scalar = s.parse().unwrap_or_else(|_| panic!("{path}: {s}"));
            let f = n.as_f64().unwrap();
            assert!((x.to_f64() - f).abs() < 1e-9, "{path}: {s} vs {f}");
            *count += 1;
        }
        (Value::Array(a), Value::Array(b)) => {
            assert_eq!(a.len(), b.len(), "{path}");
            for (i, (x, y)) in a.iter().zip(b).enumerate() {
                compare(x, y, &format!("{path}[{i}]"), count);
            }
        }
        (Value::Object(a), Value::Object(b)) => {
            assert_eq!(a.keys().collect::<Vec<_>>(), b.keys().collect::<Vec<_>>(), "{path}");
            for (k, x) in a {
                compare(x, &b[k], &format!("{path}.{k}"), count);
            }
        }
        (a, b) => assert_eq!(a, b, "{path}"),
    }
}

#[test]
fn float_mode_agrees_with_exact() {
    for source in ["nikonorov4", "nikonorov5"] {
        let exact: Value = serde_json::from_str(&stdout(&["report", source, "--all", "--format", "json"])).unwrap();
        let float: Value =
            serde_json::from_str(&stdout(&["report", source, "--all", "--format", "json", "--float"])).unwrap();
        let mut count = 0;
        compare(&exact, &float, "", &mut count);
        assert!(count > 100, "{source}: only {count} numbers compared");
    }
}

#[test]
fn full_report_nikonorov5() {
    let text = stdout(&["report", "nikonorov5", "--all"]);
    assert!(text.contains("obstructed"));
    assert!(text.contains("x-4/15"));
}

#[test]
fn full_report_abelian() {
    let text = stdout(&["report", "abelian", "--dim", "4", "--all", "--format", "json"]);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["curvature"]["flat"], Value::Bool(true));
    assert_eq!(v["ricci"]["einstein"]["einstein"], Value::Bool(true));
}

#[test]
fn text_and_json_formats() {
    let text = stdout(&["einstein", "nikonorov4"]);
    assert!(text.contains("einstein: true"), "{text}");
    let v: Value = serde_json::from_str(&stdout(&["einstein", "nikonorov4", "--format", "json"])).unwrap();
    assert_eq!(v["constant"], Value::String("-1".into()));
}

#[test]
fn catalog_output_reloads() {
    let dir = std::env::temp_dir().join(format!("liecurv-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("g1.json");
    std::fs::write(&path, stdout(&["catalog", "g1", "--n", "3"])).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        stdout(&["ricci", p, "--format", "json"]),
        stdout(&["ricci", "g1", "--n", "3", "--format", "json"])
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["conventions"]), 0);
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["validate", "so3"]), 0);
    assert_eq!(code(&["validate", "no-such-entry"]), 1);
    assert_eq!(code(&["ricci", "g1"]), 1);
    assert_eq!(code(&["ricci", "so3", "--tol", "1e-6"]), 1);
    assert_eq!(code(&["foliation", "nikonorov4", "--vertical", "A,Q"]), 1);
    assert_eq!(code(&["complex", "g1", "--n", "2", "--vertical", "X2,X3"]), 1);
    assert_eq!(code(&["bogus"]), 1);
    let err = run(&["ricci", "g1"]);
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}

#[test]
fn invalid_algebra_file_exit_one() {
    let dir = std::env::temp_dir().join(format!("liecurv-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(
        &path,
        r#"{"dim": 3, "brackets": [{"i": 0, "j": 1, "k": 0, "coeff": "1"}, {"i": 0, "j": 2, "k": 1, "coeff": "1"}]}"#,
    )
    .unwrap();
    let out = run(&["validate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], Value::Bool(false));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sampling_is_reproducible() {
    let args = [
        "complex",
        "g1",
        "--n",
        "2",
        "--vertical",
        "X2,X3",
        "--sample",
        "5",
        "--seed",
        "7",
        "--format",
        "json",
    ];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["integrable"], Value::from(0));
}
