use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn golodkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golodkit")).args(args).output().expect("spawn golodkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = golodkit(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

#[test]
fn verdict_json_schema() {
    let v = json(&["golod", "--vars", "x,y,z", "--ideal", "(x^2,y*z)", "--format", "json"]);
    assert_eq!(v["status"], "not_golod");
    for key in ["certificates", "engines", "reduced_context", "notes", "timing_ms"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let c = &v["certificates"][0];
    assert_eq!(c["kind"], "cond2_violation");
    assert_eq!(c["f"]["text"], "x");
    assert_eq!(c["g"]["text"], "z");
    assert_eq!(c["product"]["text"], "x*z");
}

#[test]
fn text_and_json_agree() {
    for ideal in ["(x^2,y*z)", "(x^2,x*y,x*z,y^2,y*z,z^2)", "(x^3,y^3,z^3,x*y*z)"] {
        let text = stdout(&golodkit(&["golod", "--vars", "x,y,z", "--ideal", ideal]));
        let v = json(&["golod", "--vars", "x,y,z", "--ideal", ideal, "--format", "json"]);
        let status = v["status"].as_str().unwrap();
        assert!(text.starts_with(&format!("status: {status}\n")), "{text}");
        let count = text.lines().filter(|l| l.starts_with("certificate")).count();
        assert_eq!(count, v["certificates"].as_array().unwrap().len());
    }
}

#[test]
fn four_variable_verdict_never_golod() {
    let v = json(&["golod", "--vars", "x,y,z,w", "--ideal", "(x^2,x*y,y^2,z^2,z*w,w^2,x*z)", "--format", "json"]);
    assert_ne!(v["status"], "golod");
}

#[test]
fn exit_codes() {
    assert_eq!(golodkit(&["colon", "--vars", "x,y,z", "--ideal", "(x^2,x*z,y*z)", "--by", "(y)"]).status.code(), Some(0));
    // parse error
    assert_eq!(golodkit(&["golod", "--vars", "x,y,z", "--ideal", "(x^)"]).status.code(), Some(2));
    // undeclared variable
    assert_eq!(golodkit(&["golod", "--vars", "x,y", "--ideal", "(z^2)"]).status.code(), Some(2));
    // unknown subcommand
    assert_eq!(golodkit(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(golodkit(&["--help"]).status.code(), Some(0));
    let o = golodkit(&["golod", "--vars", "x,y,z", "--ideal", "(x^)"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 3"));
}

#[test]
fn ideal_operations() {
    let run = |args: &[&str]| stdout(&golodkit(args)).trim().to_string();
    assert_eq!(run(&["colon", "--vars", "x,y,z", "--ideal", "(x^2*y,x*z,y^2*z)", "--by", "(y)"]), "(x^2, x*z, y*z)");
    assert_eq!(run(&["closure", "--vars", "x,y,z", "--ideal", "(x^2,y^4,z^4,y*z)"]), "(x^2, x*y^2, x*z^2, y^4, y*z, z^4)");
    assert_eq!(run(&["reduce", "--vars", "x,y,z", "--ideal", "(x,y^2,y*z,z^2)"]), "k[y,z]: (y^2, y*z, z^2)");
}

#[test]
fn search_is_reproducible() {
    let args = ["search", "--mode", "product3", "--trials", "20", "--seed", "7", "--format", "json"];
    let a = json(&args);
    let b = json(&args);
    let strip = |mut v: Value| {
        if let Some(o) = v.as_object_mut() {
            o.remove("timing_ms");
            o.remove("elapsed_ms");
        }
        v
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn threads_variable_does_not_change_results() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_golodkit"))
            .args(["search", "--mode", "closure3", "--trials", "30", "--seed", "3"])
            .env("GOLODKIT_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        stdout(&o).lines().filter(|l| !l.contains("ms")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run("1"), run("0"));
}

#[test]
fn corpus_reproduces_golden_outputs() {
    let root = workspace_root();
    let o = golodkit(&["corpus", "run", "--all", "--dir", root.to_str().unwrap()]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(out.contains("10/10 entries reproduce"), "{out}");
}
