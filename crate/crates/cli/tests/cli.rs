use std::io::Write;
use std::process::{Command, Output};

fn rookring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn rsk_example() {
    let out = rookring(&["rsk", "4,1,8,5,3,6,2,7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "# rsk n=8 field=QQ count=1\nP (1,2,6,7),(3,5),(4),(8)\nQ (1,3,6,8),(2,4),(5),(7)\nshape 4,2,1,1\n"
    );
}

#[test]
fn hilbert_text_csv_json() {
    let text = rookring(&["hilbert", "--n", "4"]);
    assert_eq!(stdout(&text), "# hilbert n=4 field=QQ count=4\n1,9,13,1\n");
    let csv = rookring(&["hilbert", "--n", "4", "--format", "csv"]);
    let body = stdout(&csv);
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(body.as_bytes());
    let dims: Vec<String> = reader.records().map(|r| r.unwrap()[1].to_string()).collect();
    assert_eq!(dims, vec!["1", "9", "13", "1"]);
    let json = rookring(&["hilbert", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["field"], "QQ");
    assert_eq!(v["data"]["coefficients"], serde_json::json!([1, 9, 13, 1]));
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = rookring(&["basis", "--n", "5", "--threads", "1"]);
    let b = rookring(&["basis", "--n", "5", "--threads", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("# basis n=5 field=QQ count=120\n"));
}

#[test]
fn exit_codes() {
    let parse = rookring(&["rsk", "4,1,x"]);
    assert_eq!(parse.status.code(), Some(1));
    assert!(stderr(&parse).contains("position 4"));
    let domain = rookring(&["rsk", "1,1,2"]);
    assert_eq!(domain.status.code(), Some(1));
    let guard = rookring(&["hilbert", "--n", "12"]);
    assert_eq!(guard.status.code(), Some(2));
    assert!(stderr(&guard).contains("resource guard"));
    let field = rookring(&["char-table", "--n", "3", "--field", "5"]);
    assert_eq!(field.status.code(), Some(1));
    let usage = rookring(&["frobnicate"]);
    assert_eq!(usage.status.code(), Some(1));
    let bad_prime = rookring(&["basis", "--n", "3", "--field", "9"]);
    assert_eq!(bad_prime.status.code(), Some(1));
}

#[test]
fn reduce_text_and_json_input() {
    let out = rookring(&["reduce", "--n", "2", "x[1,1]"]);
    assert_eq!(stdout(&out), "# reduce n=2 field=QQ count=1\nx[2,2]\n");
    let out = rookring(&["reduce", "--n", "3", "2*x[1,1]^2 + 3*x[1,2]", "--field", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("\n0\n"));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    write!(file, r#"[{{"coeff": "1/2", "monomial": [[1, 1, 1]]}}]"#).unwrap();
    let out = rookring(&["reduce", "--n", "2", "--input", file.path().to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["normal_form"][0]["coeff"], "1/2");
    assert_eq!(v["data"]["normal_form"][0]["monomial"], serde_json::json!([[2, 2, 1]]));
    let bad = rookring(&["reduce", "--n", "2", "x[3,1]"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn shadow_and_check_rook() {
    let out = rookring(&["shadow", "4,1,8,5,3,6,2,7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("# shadow n=8 field=QQ count=4\n"));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "3; (2,1)").unwrap();
    let out = rookring(&["check-rook", file.path().to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["shadow_set"], false);
    assert_eq!(v["data"]["rewrite"]["axis"], "y");
    let out = rookring(&["check-rook", "3; (2,3) (3,2)"]);
    assert!(stdout(&out).contains("shadow_set true\npermutation 3,2,1\n"));
}

#[test]
fn local_statistics() {
    let out = rookring(&["local-basis", "--n", "3", "--k", "2"]);
    assert_eq!(stdout(&out).lines().next().unwrap(), "# local-basis n=3 field=QQ count=6");
    let out = rookring(&["localize", "--n", "4", "exc", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["data"]["k"], 1);
    assert_eq!(v["data"]["local"], true);
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "permutation,value").unwrap();
    for (w, value) in [("1,2,3", 1), ("1,3,2", 0), ("2,1,3", 0), ("2,3,1", 0), ("3,1,2", 0), ("3,2,1", 0)] {
        writeln!(file, "\"{w}\",{value}").unwrap();
    }
    let path = file.path().to_str().unwrap();
    let out = rookring(&["localize", "--n", "3", path, "--k", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("not local k=1"));
    let out = rookring(&["localize", "--n", "3", path]);
    assert!(stdout(&out).contains("local k=2"));
}

#[test]
fn characters_and_conjectures() {
    let out = rookring(&["char-table", "--n", "3", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "# char-table n=3 field=QQ count=3\nlambda,3,\"2,1\",\"1,1,1\"\n3,1,1,1\n\"2,1\",-1,0,2\n\"1,1,1\",1,-1,1\n"
    );
    let out = rookring(&["alpha", "--n", "4", "--k", "2"]);
    assert!(stdout(&out).ends_with("1,1,1,1: 13\n"));
    let out = rookring(&["verify", "novak-rhoades", "--n", "7", "--format", "json", "--tables"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["count"], 5);
    assert!(v["data"].as_array().unwrap().iter().all(|r| r["verdict"] == "holds"));
    assert!(v["data"][0]["multiplicity_tables"]["source"].is_array());
    let out = rookring(&["verify", "equivariant", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with("holds")).count(), 4);
}

#[test]
fn verifications() {
    for args in [
        vec!["verify", "rsk", "--n", "6"],
        vec!["verify", "basis", "--n", "4"],
        vec!["verify", "basis", "--n", "4", "--field", "2"],
        vec!["verify", "hilbert", "--n", "6"],
        vec!["verify", "graded", "--n", "4"],
        vec!["verify", "graded", "--n", "5", "--identity-only"],
        vec!["verify", "membership", "--n", "3", "--samples", "20"],
    ] {
        let out = rookring(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        assert!(stdout(&out).lines().nth(1).unwrap().starts_with("ok "), "{args:?}");
    }
    let out = rookring(&["verify", "rsk", "--n", "6"]);
    assert!(stdout(&out).starts_with("# verify rsk n=6 field=QQ count=720\n"));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.json");
    let out = rookring(&["hilbert", "--n", "3", "--format", "json", "-o", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["data"]["coefficients"], serde_json::json!([1, 4, 1]));
}
