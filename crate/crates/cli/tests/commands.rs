use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clutterkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: Option<&[u8]>) -> Vec<u8> {
    let out = run(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    out.stdout
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).expect("stdout is JSON")
}

fn code(args: &[&str], stdin: Option<&[u8]>) -> i32 {
    run(args, stdin).status.code().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn validate_example1() {
    let file = ok(&["gen", "example1", "--n", "5"], None);
    let v = json(&ok(&["validate"], Some(&file)));
    assert_eq!(v["valid"], true);
    assert_eq!(v["c1"], false);
    assert_eq!(v["c2"], true);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(5), Some(2)));
}

#[test]
fn validate_rejects_bad_input() {
    let out = run(
        &["validate", "-"],
        Some(br#"{"vertices":["a","b"],"edges":[["a"],["a","b"]]}"#),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("edges 0 and 1"));
    assert_eq!(code(&["validate"], Some(b"{")), 1);
    assert_eq!(code(&["validate", "/no/such/file"], None), 1);
}

#[test]
fn hardness_reports() {
    let file = ok(&["gen", "example1", "--n", "5"], None);
    let out = ok(&["hardness", "--witness"], Some(&file));
    assert!(out.starts_with(br#"{"overall":{"num":1,"den":4},"#));
    assert_eq!(json(&out)["edges"][1]["witness"], serde_json::json!(["2"]));
    assert_eq!(ok(&["hardness", "--oracle", "--witness"], Some(&file)), out);

    let edge = json(&ok(&["hardness", "--edge", "1"], Some(&file)));
    assert_eq!(edge["index"], 1);
    assert!(edge.get("witness").is_none());
    assert_eq!(code(&["hardness", "--edge", "7"], Some(&file)), 2);

    let ext = ok(&["gen", "extremal", "--k", "3"], None);
    let v = json(&ok(&["hardness"], Some(&ext)));
    assert_eq!(v["overall"], serde_json::json!({"num": 1, "den": 5}));
}

#[test]
fn generated_shapes() {
    let v = json(&ok(&["gen", "extremal", "--k", "3"], None));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 9);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);

    let v = json(&ok(&["gen", "example1", "--n", "3"], None));
    assert_eq!(
        v,
        serde_json::json!({"vertices": ["1", "2", "3"], "edges": [["1", "3"], ["2", "3"]]})
    );

    let g = json(&ok(&["gen", "kmn", "--a", "2", "--b", "3"], None));
    assert_eq!(g["adjacency"].as_array().unwrap().len(), 6);
    let g = json(&ok(&["gen", "kn", "--n", "4"], None));
    assert_eq!(g["adjacency"].as_array().unwrap().len(), 6);
}

#[test]
fn gen_parameter_errors_are_usage_errors() {
    assert_eq!(code(&["gen", "extremal"], None), 2);
    assert_eq!(code(&["gen", "extremal", "--k", "1"], None), 2);
    assert_eq!(code(&["gen", "example1", "--n", "2"], None), 2);
    assert_eq!(
        code(&["gen", "random-graph", "--n", "4", "--p", "3/2"], None),
        2
    );
    assert_eq!(
        code(&["gen", "random-graph", "--n", "4", "--p", "half"], None),
        2
    );
    assert_eq!(
        code(
            &["gen", "random", "--n", "4", "--m", "3", "--max-size", "9"],
            None
        ),
        2
    );
    assert_eq!(code(&["gen", "nonsense"], None), 2);
}

#[test]
fn generation_is_deterministic() {
    let args = ["gen", "random", "--n", "10", "--m", "6", "--seed", "42"];
    assert_eq!(ok(&args, None), ok(&args, None));
    let args = [
        "gen", "random", "--n", "10", "--m", "6", "--seed", "42", "--c1c2",
    ];
    assert_eq!(ok(&args, None), ok(&args, None));
    let args = [
        "gen",
        "random-graph",
        "--n",
        "8",
        "--p",
        "1/3",
        "--seed",
        "7",
    ];
    assert_eq!(ok(&args, None), ok(&args, None));
    let a = ok(
        &["gen", "random", "--n", "10", "--m", "6", "--seed", "1"],
        None,
    );
    let b = ok(
        &["gen", "random", "--n", "10", "--m", "6", "--seed", "2"],
        None,
    );
    assert_ne!(a, b);
}

#[test]
fn gen_then_validate_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[&[&str]] = &[
        &["example1", "--n", "7"],
        &["extremal", "--k", "4"],
        &["random", "--n", "12", "--m", "9", "--seed", "3"],
        &["random", "--n", "9", "--m", "5", "--seed", "3", "--c1c2"],
        &[
            "random",
            "--n",
            "6",
            "--m",
            "4",
            "--min-size",
            "2",
            "--max-size",
            "3",
            "--seed",
            "5",
        ],
    ];
    for (i, case) in cases.iter().enumerate() {
        let path = dir.path().join(format!("c{i}.json"));
        let path = path.to_str().unwrap();
        let mut args = vec!["gen"];
        args.extend_from_slice(case);
        args.extend_from_slice(&["--out", path]);
        assert!(ok(&args, None).is_empty());
        let v = json(&ok(&["validate", path], None));
        assert_eq!(v["valid"], true, "{case:?}");
        // Re-emitting through the library gives the same canonical bytes.
        let original = std::fs::read(path).unwrap();
        let hardness_a = ok(&["hardness", path], None);
        let hardness_b = ok(&["hardness"], Some(&original));
        assert_eq!(hardness_a, hardness_b);
    }
}

#[test]
fn extremal_pipes_into_verify() {
    for k in 2..=8 {
        let file = ok(&["gen", "extremal", "--k", &k.to_string()], None);
        let v = json(&ok(&["verify", "--bound", "main"], Some(&file)));
        assert_eq!(v["comparison"]["relation"], "Equal", "k={k}");
        assert_eq!(v["applicable"], true);
    }
}

#[test]
fn verify_variants() {
    let e6 = ok(&["gen", "example1", "--n", "6"], None);
    let v = json(&ok(&["verify"], Some(&e6)));
    assert_eq!(v["applicable"], false);
    let v = json(&ok(&["verify", "--bound", "general"], Some(&e6)));
    assert_eq!(v["applicable"], true);
    assert_eq!(v["comparison"]["relation"], "Equal");

    // K_{3,3} sits below the independent-set bound; reported, not enforced.
    let g = ok(&["gen", "kmn", "--a", "3", "--b", "3"], None);
    let c = ok(&["from-graph"], Some(&g));
    let v = json(&ok(&["verify", "--bound", "mis"], Some(&c)));
    assert_eq!(v["comparison"]["relation"], "Less");
    assert_eq!(v["enforced"], false);
}

#[test]
fn trace_on_smallest_extremal() {
    let file = ok(&["gen", "extremal", "--k", "2"], None);
    let t = json(&ok(&["trace"], Some(&file)));
    assert_eq!(t["branch"], "AllSingletons");
    assert_eq!(t["clique_ok"], true);
    assert_eq!(t["degree_z"], 2);
    assert_eq!(t["final_value"], serde_json::json!({"num": 1, "den": 2}));

    let e5 = ok(&["gen", "example1", "--n", "5"], None);
    assert_eq!(code(&["trace"], Some(&e5)), 1);
}

#[test]
fn from_graph_modes() {
    let dir = tempfile::tempdir().unwrap();
    let k22 = ok(&["gen", "kmn", "--a", "2", "--b", "2"], None);
    let v = json(&ok(&["from-graph", "--mode", "mis"], Some(&k22)));
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    let p4 = write(dir.path(), "p4.txt", "p 4 3\ne 0 1\ne 1 2\ne 2 3\n");
    let v = json(&ok(&["from-graph", "--mode", "matchings", &p4], None));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    let empty = write(dir.path(), "empty.txt", "p 3 0\n");
    assert_eq!(
        code(&["from-graph", "--mode", "matchings", &empty], None),
        1
    );

    let k6 = ok(&["gen", "kn", "--n", "6"], None);
    assert_eq!(
        code(
            &["from-graph", "--mode", "matchings", "--cap", "3"],
            Some(&k6)
        ),
        1
    );

    let ext = ok(&["gen", "extremal", "--k", "3", "--graph"], None);
    let derived = json(&ok(&["from-graph"], Some(&ext)));
    assert_eq!(derived["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn outputs_are_byte_stable() {
    let file = ok(&["gen", "extremal", "--k", "3"], None);
    for cmd in [
        &["hardness", "--witness"][..],
        &["verify"],
        &["trace"],
        &["validate"],
    ] {
        assert_eq!(ok(cmd, Some(&file)), ok(cmd, Some(&file)), "{cmd:?}");
    }
}
