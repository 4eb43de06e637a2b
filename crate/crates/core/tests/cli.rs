use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn gentle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gentle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Value of `key` in the `[data]` section.
fn field(out: &str, key: &str) -> Option<String> {
    out.split("\n[data]\n")
        .nth(1)?
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(String::from))
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn check_reports_cycles_and_global_dimension() {
    let o = gentle(&["check", &path("C4.alg")]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(field(&out, "status").as_deref(), Some("ok"));
    assert_eq!(field(&out, "cycles").as_deref(), Some("[(b,g,d,a)]"));
    assert_eq!(field(&out, "gldim").as_deref(), Some("infinite"));
    let out = stdout(&gentle(&["check", &path("LIN.alg")]));
    assert_eq!(field(&out, "gldim").as_deref(), Some("2"));
}

#[test]
fn check_rejects_a_broken_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("broken.alg");
    std::fs::write(
        &bad,
        "vertex 1\nvertex 2\narrow a 1 2\narrow b 1 2\narrow c 1 2\n",
    )
    .unwrap();
    let o = gentle(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("outgoing"), "{err}");
}

#[test]
fn dot_output() {
    let out = stdout(&gentle(&["check", &path("A3.alg"), "--dot"]));
    assert!(out.starts_with("digraph"));
    assert!(out.contains("label=\"c\""));
}

#[test]
fn ext_examples() {
    let out = stdout(&gentle(&[
        "ext",
        &path("C4.alg"),
        "--from",
        "e",
        "--to",
        "f",
        "--max",
        "12",
    ]));
    assert_eq!(
        field(&out, "ext.dims").as_deref(),
        Some("0,1,0,0,0,1,0,0,0,1,0,0")
    );
    assert_eq!(field(&out, "seq.period").as_deref(), Some("4"));
    let out = stdout(&gentle(&[
        "ext",
        &path("LIN.alg"),
        "--from",
        "f",
        "--to",
        "e",
        "--max",
        "8",
    ]));
    assert_eq!(field(&out, "ext.dims").as_deref(), Some("0,1,0,0,0,0,0,0"));
    assert_eq!(field(&out, "seq.class").as_deref(), Some("eventually_zero"));
    let out = stdout(&gentle(&[
        "ext",
        &path("TRI3.alg"),
        "--from",
        "@x",
        "--to",
        "@x",
        "--max",
        "9",
    ]));
    assert_eq!(
        field(&out, "ext.dims").as_deref(),
        Some("0,0,1,0,0,1,0,0,1")
    );
    assert_eq!(field(&out, "seq.period").as_deref(), Some("3"));
}

#[test]
fn ext_basis_lists_middle_terms() {
    let out = stdout(&gentle(&[
        "ext",
        &path("C4.alg"),
        "--from",
        "e",
        "--to",
        "f",
        "--max",
        "6",
        "--basis",
    ]));
    assert_eq!(out.matches("basis 0: middle").count(), 2);
}

#[test]
fn resolve_examples() {
    let terms = |out: &str, n: usize| -> Vec<String> {
        (0..n)
            .map(|i| field(out, &format!("res.deg.{i}")).unwrap())
            .collect()
    };
    let out = stdout(&gentle(&[
        "resolve",
        &path("LIN.alg"),
        "--string",
        "f",
        "--depth",
        "6",
    ]));
    assert_eq!(terms(&out, 4), ["P_4", "P_1", "P_2", "0"]);
    let out = stdout(&gentle(&[
        "resolve",
        &path("C4.alg"),
        "--string",
        "f",
        "--depth",
        "9",
    ]));
    assert_eq!(terms(&out, 5), ["P_4", "P_1", "P_2", "P_6", "P_5"]);
    assert_eq!(field(&out, "res.tail.period").as_deref(), Some("4"));
    let out = stdout(&gentle(&[
        "resolve",
        &path("C4.alg"),
        "--string",
        "f -d",
        "--depth",
        "3",
    ]));
    assert_eq!(terms(&out, 3), ["P_4⊕P_6", "P_5", "0"]);
}

#[test]
fn oracle_agrees_on_the_ext_examples() {
    for (file, from, to, max) in [
        ("C4.alg", "e", "f", "12"),
        ("LIN.alg", "f", "e", "8"),
        ("TRI3.alg", "@x", "@x", "9"),
    ] {
        let o = gentle(&[
            "oracle",
            &path(file),
            "--from",
            from,
            "--to",
            to,
            "--max",
            max,
        ]);
        assert!(o.status.success(), "{file}");
        assert_eq!(field(&stdout(&o), "agree").as_deref(), Some("true"));
    }
}

#[test]
fn tri_examples() {
    let out = stdout(&gentle(&["tri", &path("HEX.tri")]));
    assert_eq!(field(&out, "vertices").as_deref(), Some("3"));
    assert_eq!(field(&out, "arrows").as_deref(), Some("3"));
    assert_eq!(field(&out, "cycles.len3").as_deref(), Some("1"));
    let out = stdout(&gentle(&["tri", &path("SQUARE.tri")]));
    assert_eq!(field(&out, "vertices").as_deref(), Some("1"));
    assert_eq!(field(&out, "arrows").as_deref(), Some("0"));
    let out = stdout(&gentle(&["tri", &path("FAN5.tri")]));
    assert_eq!(field(&out, "vertices").as_deref(), Some("2"));
    assert_eq!(field(&out, "arrows").as_deref(), Some("1"));
}

#[test]
fn emitted_algebra_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("hex.alg");
    let o = gentle(&[
        "tri",
        &path("HEX.tri"),
        "--emit-algebra",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let a = gentle::format::parse_algebra(&text).unwrap();
    assert_eq!(a, gentle::fixtures::hex().algebra().unwrap());
    assert_eq!(a.to_string(), text);
    let o = gentle(&["check", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "cycles.len3"), None);
    assert_eq!(field(&stdout(&o), "gldim").as_deref(), Some("infinite"));
}

#[test]
fn fuzz_is_deterministic_and_passes() {
    let args = ["fuzz", "--seed", "1", "--count", "50", "--horizon", "6"];
    let (x, y) = (gentle(&args), gentle(&args));
    assert!(x.status.success(), "{}", stdout(&x));
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(field(&stdout(&x), "status").as_deref(), Some("pass"));
}

#[test]
fn exit_codes() {
    assert_eq!(gentle(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(gentle(&["ext", &path("C4.alg")]).status.code(), Some(2));
    let o = gentle(&["ext", &path("C4.alg"), "--from", "b g", "--to", "f"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        gentle(&["check", "/nonexistent.alg"]).status.code(),
        Some(1)
    );
}
