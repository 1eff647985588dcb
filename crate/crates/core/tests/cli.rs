use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn qsheaf(args: &[&str], job: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qsheaf"))
        .args(args)
        .arg("--input")
        .arg(fixture(job))
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Reads the text format back: `key: value` lines, and `key:` followed by
/// `  - item` lines or `  - k: v` / `    k: v` object items.
fn parse_text(text: &str) -> Vec<(String, Value)> {
    let mut out: Vec<(String, Value)> = Vec::new();
    for line in text.lines() {
        if let Some(item) = line.strip_prefix("  - ") {
            let Value::Array(items) = &mut out.last_mut().unwrap().1 else { panic!("item outside a list") };
            match item.split_once(": ") {
                Some((k, v)) if !k.contains(' ') => {
                    let mut m = serde_json::Map::new();
                    m.insert(k.into(), Value::String(v.into()));
                    items.push(Value::Object(m));
                }
                _ => items.push(Value::String(item.into())),
            }
        } else if let Some(field) = line.strip_prefix("    ") {
            let Value::Array(items) = &mut out.last_mut().unwrap().1 else { panic!("field outside a list") };
            let Some(Value::Object(m)) = items.last_mut() else { panic!("field outside an object") };
            let (k, v) = field.split_once(": ").unwrap();
            m.insert(k.into(), Value::String(v.into()));
        } else if let Some(key) = line.strip_suffix(':') {
            out.push((key.into(), Value::Array(vec![])));
        } else {
            let (k, v) = line.split_once(": ").unwrap();
            out.push((k.into(), Value::String(v.into())));
        }
    }
    out
}

/// The text form a JSON value takes when it is not a top-level list.
fn flat(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(flat).collect::<Vec<_>>().join(", ")),
        Value::Object(m) => {
            format!("{{{}}}", m.iter().map(|(k, v)| format!("{k}: {}", flat(v))).collect::<Vec<_>>().join(", "))
        }
        other => other.to_string(),
    }
}

fn assert_same_data(text: &str, json: &str) {
    let json: Value = serde_json::from_str(json).unwrap();
    let Value::Object(fields) = json else { panic!("report is an object") };
    let parsed = parse_text(text);
    assert_eq!(parsed.len(), fields.len());
    for ((tk, tv), (jk, jv)) in parsed.iter().zip(fields.iter()) {
        assert_eq!(tk, jk);
        match (tv, jv) {
            (Value::Array(t_items), Value::Array(j_items)) => {
                assert_eq!(t_items.len(), j_items.len(), "{tk}");
                for (t, j) in t_items.iter().zip(j_items) {
                    match (t, j) {
                        (Value::Object(tm), Value::Object(jm)) => {
                            assert_eq!(tm.len(), jm.len());
                            for ((a, av), (b, bv)) in tm.iter().zip(jm) {
                                assert_eq!(a, b);
                                assert_eq!(av.as_str().unwrap(), flat(bv), "{tk}.{a}");
                            }
                        }
                        (t, j) => assert_eq!(t.as_str().unwrap(), flat(j), "{tk}"),
                    }
                }
            }
            (t, j) => assert_eq!(t.as_str().unwrap(), flat(j), "{tk}"),
        }
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&qsheaf(&["check"], "p1p1_tangent.json")), 0);
    assert_eq!(code(&qsheaf(&["check"], "p1p1_duplicated_row.json")), 1);
    assert_eq!(code(&qsheaf(&["check"], "p1p1_altered_twists.json")), 1);
    assert_eq!(code(&qsheaf(&["present"], "bad_rational.json")), 2);
    assert_eq!(code(&qsheaf(&["present"], "malformed.json")), 2);
    assert_eq!(code(&qsheaf(&["correlator", "H", "H"], "p2_quantum.json")), 2);
    assert_eq!(code(&qsheaf(&["correlator", "H", "H", "psi"], "p2_quantum.json")), 2);
    assert_eq!(code(&qsheaf(&["limit", "--mode", "undeform"], "p2_quantum.json")), 2);
    assert_eq!(code(&qsheaf(&["present"], "qsc_degenerate.json")), 3);
    let gb = qsheaf(&["gb"], "qsc_degenerate.json");
    assert_eq!(code(&gb), 3);
    assert!(stdout(&gb).contains("degenerate: true"));
    assert_eq!(code(&qsheaf(&["limit", "--mode", "undeform"], "qsc_undeformed.json")), 0);
    assert_eq!(code(&qsheaf(&["limit", "--mode", "classical"], "qsc_generic.json")), 0);
    let missing = Command::new(env!("CARGO_BIN_EXE_qsheaf")).arg("present").output().unwrap();
    assert_eq!(code(&missing), 2);
}

#[test]
fn errors_go_to_stderr() {
    let o = qsheaf(&["present"], "bad_rational.json");
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("1/0"));
}

#[test]
fn reruns_are_byte_identical() {
    let runs: &[(&[&str], &str)] = &[
        (&["present"], "qsc_generic.json"),
        (&["correlator"], "qsc_generic.json"),
        (&["pairing", "--format", "json"], "qsc_generic.json"),
        (&["check", "--format", "json"], "p1p1_duplicated_row.json"),
        (&["gb"], "qsc_degenerate.json"),
        (&["limit", "--mode", "undeform"], "qsc_undeformed.json"),
    ];
    for (args, job) in runs {
        let (a, b) = (qsheaf(args, job), qsheaf(args, job));
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?} {job}");
        assert_eq!(a.status, b.status);
    }
}

#[test]
fn text_and_json_agree() {
    for (args, job) in [
        (vec!["present"], "p2_quantum.json"),
        (vec!["present"], "qsc_generic.json"),
        (vec!["correlator"], "qsc_eps100.json"),
        (vec!["correlator"], "qsc_undeformed.json"),
        (vec!["pairing"], "qsc_generic.json"),
        (vec!["check"], "p1p1_altered_twists.json"),
        (vec!["limit", "--mode", "classical"], "p2_quantum.json"),
    ] {
        let text = stdout(&qsheaf(&args, job));
        let mut json_args = args.clone();
        json_args.extend(["--format", "json"]);
        let json = stdout(&qsheaf(&json_args, job));
        assert_same_data(&text, &json);
    }
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("present.txt");
    let o = Command::new(env!("CARGO_BIN_EXE_qsheaf"))
        .args(["present", "--input"])
        .arg(fixture("p2_quantum.json"))
        .arg("--output")
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&qsheaf(&["present"], "p2_quantum.json")));
}

#[test]
fn spot_outputs() {
    let p = stdout(&qsheaf(&["present", "--format", "json"], "qsc_eps100.json"));
    let v: Value = serde_json::from_str(&p).unwrap();
    assert_eq!(v["relations"], serde_json::json!(["psi^2 + psi*psit - q1", "psit^2 - q2"]));
    assert_eq!(v["graded_dimensions"], serde_json::json!([1, 2, 1]));

    let c = stdout(&qsheaf(&["correlator", "H^2", "H^2", "H", "--format", "json"], "p2_quantum.json"));
    let v: Value = serde_json::from_str(&c).unwrap();
    assert_eq!(v["entries"][0]["value"], "q");
    let c = stdout(&qsheaf(&["correlator", "1", "H", "H"], "p2_quantum.json"));
    assert!(c.contains("    value: 1\n"));

    let q = stdout(&qsheaf(&["correlator", "--format", "json"], "qsc_undeformed.json"));
    let v: Value = serde_json::from_str(&q).unwrap();
    assert_eq!(v["entries"][0]["value"], "q1*q2");
    assert_eq!(v["entries"][0]["by_degree"][0]["degree"], serde_json::json!([1, 1]));

    let g = stdout(&qsheaf(&["gb", "--format", "json"], "p2_quantum.json"));
    let v: Value = serde_json::from_str(&g).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["H^3 - q"]));
    let g = stdout(&qsheaf(&["gb", "--format", "json"], "qsc_undeformed.json"));
    let v: Value = serde_json::from_str(&g).unwrap();
    assert_eq!(v["basis"], serde_json::json!(["psi^2 - q1", "psit^2 - q2"]));

    let dup = stdout(&qsheaf(&["check", "--format", "json"], "p1p1_duplicated_row.json"));
    let v: Value = serde_json::from_str(&dup).unwrap();
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["bundle_regularity"]);
}
