use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mvg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvg"))
        .args(args)
        .output()
        .unwrap()
}

fn mvg_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mvg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn petersen_pipeline() {
    let built = mvg(&["build", "srg", "10", "3", "0", "1"]);
    assert_eq!(code(&built), 0);
    let report = mvg_stdin(&["--json", "verify", "-"], &built.stdout);
    assert_eq!(code(&report), 0);
    let r = json(&report);
    for key in [
        "associative",
        "has_identity",
        "has_inverses",
        "involutive",
        "reciprocity_holds",
    ] {
        assert_eq!(r[key], true, "{key}");
    }
    let human = mvg_stdin(&["verify", "-"], &built.stdout);
    assert!(stdout(&human).contains("associativity  ok"));
}

#[test]
fn classify_examples() {
    let o = mvg(&["--json", "classify", "--sym", "6", "2", "1", "0"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["coset"], false);
    assert_eq!(v["derived"], serde_json::json!([10, 3, 0, 1]));

    let o = mvg(&["--json", "classify", "--swap", "3", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        json(&o),
        serde_json::json!({"coset": true, "kind": "XK", "witness": {"k": 1}})
    );

    let o = mvg(&["classify", "--swap", "7", "3"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("15 is not a prime power"));

    let o = mvg(&["classify", "--sym", "6", "1", "1", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("SRG III(t=3)"));
}

#[test]
fn classify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("x.json");
    let o = mvg(&["build", "xk", "2", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let o = mvg(&["--json", "classify", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["witness"]["k"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&mvg(&["verify"])), 2);
    assert_eq!(code(&mvg(&["--bogus", "verify", "-"])), 2);
    assert_eq!(
        code(&mvg(&[
            "classify", "--sym", "6", "2", "1", "0", "--swap", "3", "1"
        ])),
        2
    );
    assert_eq!(
        code(&mvg_stdin(&["verify", "-"], b"{\"format\":\"nope\"}")),
        3
    );
    assert_eq!(code(&mvg(&["verify", "/nonexistent/file.json"])), 3);
    assert_eq!(code(&mvg(&["build", "srg", "10", "3", "0", "2"])), 3);
    assert_eq!(code(&mvg(&["build", "type2", "4", "2"])), 1);
    assert_eq!(code(&mvg(&["build", "graph", "alternating", "3"])), 4);
    assert_eq!(
        code(&mvg(&["--cap", "50", "build", "graph", "grid", "8"])),
        4
    );
    assert_eq!(code(&mvg(&["build", "graph", "polar", "2", "2", "+"])), 3);
    assert_eq!(code(&mvg(&["build", "graph", "vls", "3", "5", "1"])), 3);
    assert_eq!(code(&mvg(&["classify", "--sym", "6", "2", "1", "5"])), 3);
}

#[test]
fn isomorphism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let c = dir.path().join("c.json");
    mvg(&[
        "build",
        "srg",
        "13",
        "6",
        "2",
        "3",
        "-o",
        a.to_str().unwrap(),
    ]);
    mvg(&[
        "build",
        "type1",
        "6",
        "1",
        "1",
        "2",
        "-o",
        b.to_str().unwrap(),
    ]);
    mvg(&[
        "build",
        "srg",
        "10",
        "3",
        "0",
        "1",
        "-o",
        c.to_str().unwrap(),
    ]);
    let o = mvg(&["--json", "iso", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["isomorphic"], true);
    let o = mvg(&["iso", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "not isomorphic\n");
}

#[test]
fn coset_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let a = dir.path().join("a.json");
    let op: Vec<Vec<usize>> = (0..7)
        .map(|x| (0..7).map(|y| (x + y) % 7).collect())
        .collect();
    std::fs::write(
        &g,
        serde_json::json!({"format": "grp-v1", "size": 7, "op": op}).to_string(),
    )
    .unwrap();
    let times2: Vec<usize> = (0..7).map(|x| 2 * x % 7).collect();
    std::fs::write(
        &a,
        serde_json::json!({"format": "act-v1", "generators": [times2]}).to_string(),
    )
    .unwrap();
    let o = mvg(&[
        "build",
        "coset",
        "--group",
        g.to_str().unwrap(),
        "--action",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let coset = json(&o);
    let xk = json(&mvg(&["build", "xk", "1"]));
    assert_eq!(coset["n"], xk["n"]);
    assert_eq!(coset["table"], xk["table"]);
    let v = mvg_stdin(&["--json", "classify", "--file", "-"], &o.stdout);
    assert_eq!(code(&v), 0);
    assert_eq!(json(&v)["witness"]["k"], 1);
}

#[test]
fn graphs() {
    let o = mvg(&["build", "graph", "paley", "13"]);
    assert_eq!(code(&o), 0);
    let g = json(&o);
    assert_eq!(g["format"], "graph-v1");
    assert_eq!(g["v"], 13);
    assert_eq!(g["edges"].as_array().unwrap().len(), 39);

    let o = mvg(&["build", "graph", "tournament", "7"]);
    let d = json(&o);
    assert_eq!(d["format"], "digraph-v1");
    assert_eq!(d["arcs"].as_array().unwrap().len(), 21);

    let pentagon = b"5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    std::fs::write(&path, pentagon).unwrap();
    let o = mvg(&[
        "build",
        "graph",
        "--edge-list",
        "complement",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "5\n0 2\n0 3\n1 3\n1 4\n2 4\n");

    for args in [
        vec!["cliques", "2", "2", "1"],
        vec!["grid", "4"],
        vec!["polar", "3", "2", "-"],
        vec!["polar-plus-comp", "2"],
        vec!["bilinear", "2", "3"],
        vec!["vls", "2", "3", "1"],
    ] {
        let mut full = vec!["build", "graph"];
        full.extend(args.iter());
        assert_eq!(code(&mvg(&full)), 0, "{args:?}");
    }
}

#[test]
fn enumeration() {
    let o = mvg(&["enumerate", "--vmax", "100", "--collisions", "--json"]);
    assert_eq!(code(&o), 0);
    let c = json(&o);
    let params: Vec<_> = c
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["params"].clone())
        .collect();
    assert_eq!(
        params,
        vec![
            serde_json::json!([4, 1, 0, 0]),
            serde_json::json!([9, 4, 1, 2]),
            serde_json::json!([16, 6, 2, 2])
        ]
    );
    let o = mvg(&["enumerate", "--vmax", "13", "--csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("v,k,lambda,mu,family,witness\n"));
    assert!(text.contains("13,6,2,3,III,t=3\n"));
    let o = mvg(&["enumerate", "--vmax", "64"]);
    assert!(stdout(&o)
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>()
            == ["64", "18", "2", "6", "TABLE", "row", "1"]));
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["build", "graph", "vls", "2", "3", "4"],
        vec!["enumerate", "--vmax", "300", "--json"],
        vec!["build", "srg", "81", "20", "1", "6"],
    ] {
        let a = mvg(&args);
        let b = mvg(&args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout);
    }
}
