use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_multisect"));
    c.env_remove("MULTISECT_CEILING");
    c
}

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut c = bin();
    c.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for (k, v) in env {
        c.env(k, v);
    }
    let mut child = c.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let o = run(args, stdin);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap()
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(": ")))
        .unwrap_or_else(|| panic!("no {key} in\n{out}"))
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("multisect-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn odd_bary_pipeline() {
    let t = ok(&["gen", "--double-simplex", "3"], "");
    let b = ok(&["subdivide", "--barycentric"], &t);
    let p = ok(&["partition", "--scheme", "odd-bary"], &b);
    let v = ok(&["verify", "--expect-multisection"], &p);
    assert_eq!(field(&v, "supports_multisection"), "true");
    let r = ok(&["report", "--expect-multisection"], &p);
    assert_eq!(field(&r, "genera"), "3 3");
    assert_eq!(field(&r, "surface genus"), "3");
    assert_eq!(field(&r, "central npc"), "pass");
    assert_eq!(field(&r, "h1 onto (class 0)"), "true");
}

#[test]
fn trisection_pipeline() {
    let t = ok(&["gen", "--double-simplex", "4"], "");
    let b = ok(&["subdivide", "--barycentric"], &t);
    let p = ok(&["partition", "--scheme", "even-bary"], &b);
    assert_eq!(run(&["verify", "--expect-multisection"], &p).status.code(), Some(1));
    let q = ok(&["pachner-pass"], &p);
    let info = ok(&["info"], &q);
    assert_eq!(field(&info, "facets"), "480");
    let r = ok(&["report", "--expect-multisection"], &q);
    assert_eq!(field(&r, "euler trisection identity"), "true");
}

#[test]
fn disconnected_class_graph_fails_the_expectation() {
    let t = ok(&["gen", "--double-simplex", "2"], "");
    let b = ok(&["subdivide", "--barycentric"], &t);
    let p = ok(&["partition", "--scheme", "even-bary"], &b);
    let o = run(&["verify", "--expect-multisection"], &p);
    assert_eq!(o.status.code(), Some(1));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("diagnostic: class graph 1 disconnected"), "{out}");
    let o = run(&["verify"], &p);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn pairs_and_cube_checks() {
    let t = ok(&["gen", "--double-simplex", "5"], "");
    let p = ok(&["partition", "--scheme", "pairs", "--blocks", "0,1/2,3/4,5"], &t);
    let r = ok(&["report", "--expect-multisection"], &p);
    assert_eq!(field(&r, "genera"), "0 0 0");
    let b = ok(&["build"], &p);
    assert_eq!(field(&b, "cubes"), "yes");
    let c = ok(&["collapse", "--subset", "0"], &p);
    assert_eq!(field(&c, "spine genus"), "0");
    let o = run(&["npc-check", "--expect-pass"], &p);
    assert_eq!(o.status.code(), Some(1));
    let q = ok(&["gen", "--cross-projective", "3"], "");
    let q = ok(&["partition", "--scheme", "pairs", "--blocks", "0,1/2,3"], &q);
    let n = ok(&["npc-check", "--expect-pass"], &q);
    assert_eq!(field(&n, "npc"), "pass");
}

#[test]
fn symrep_of_the_twisted_fixture() {
    let path = data("z2_twist.tri");
    let a = ok(&["symrep", &path, "--blocks", "0,2/1,3"], "");
    assert_eq!(field(&a, "trivial"), "false");
    assert_eq!(field(&a, "generator"), "1 0 3 2");
    assert_eq!(field(&a, "admissible"), "true");
    let b = ok(&["symrep", &path, "--blocks", "0/1,2,3"], "");
    assert_eq!(field(&b, "admissible"), "false");
    let c = ok(&["cover", "--labeling", &path], "");
    let info = ok(&["info"], &c);
    assert_eq!(field(&info, "facets"), "4");
    assert_eq!(field(&info, "connected"), "yes");
    assert_eq!(field(&ok(&["symrep"], &c), "trivial"), "true");
}

#[test]
fn covers_and_moves() {
    let t = ok(&["gen", "--cross-projective", "2"], "");
    let c = ok(&["cover", "--orientation"], &t);
    let info = ok(&["info"], &c);
    assert_eq!(field(&info, "euler"), "2");
    assert_eq!(field(&info, "orientable"), "yes");
    let s = ok(&["stellar", "--facet", "0"], &t);
    assert_eq!(field(&ok(&["info"], &s), "facets"), "6");
    let a = tmp("circle-a.tri");
    let b = tmp("circle-b.tri");
    std::fs::write(&a, ok(&["gen", "--simplex-boundary", "1"], "")).unwrap();
    std::fs::write(&b, ok(&["gen", "--simplex-boundary", "1"], "")).unwrap();
    let j = ok(&["join", a.to_str().unwrap(), b.to_str().unwrap()], "");
    let info = ok(&["info"], &j);
    assert_eq!(field(&info, "dim"), "3");
    assert_eq!(field(&info, "betti-gf2"), "1 0 0 1");
}

#[test]
fn outputs_are_deterministic() {
    let t = ok(&["gen", "--double-simplex", "3"], "");
    let b = ok(&["subdivide", "--barycentric"], &t);
    let p = ok(&["partition", "--scheme", "odd-bary"], &b);
    let first = ok(&["report"], &p);
    assert_eq!(first, ok(&["report"], &p));
    assert!(first.starts_with("# multisect 0.1.0\n"));
    let j1 = tmp("det-1.json");
    let j2 = tmp("det-2.json");
    ok(&["export", "--json", j1.to_str().unwrap()], &p);
    ok(&["export", "--json", j2.to_str().unwrap()], &p);
    assert_eq!(std::fs::read(&j1).unwrap(), std::fs::read(&j2).unwrap());
}

#[test]
fn ceiling_from_flag_and_environment() {
    let t = ok(&["gen", "--double-simplex", "4"], "");
    let o = run_env(&["subdivide", "--barycentric"], &t, &[("MULTISECT_CEILING", "100")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ceiling"));
    let o = run_env(&["subdivide", "--barycentric", "--ceiling", "1000"], &t, &[("MULTISECT_CEILING", "100")]);
    assert_eq!(o.status.code(), Some(0));
    let o = run_env(&["subdivide", "--barycentric"], &t, &[("MULTISECT_CEILING", "many")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(run(&["info"], "dim 3\nfacets 1\n0 0 0 1 2 3\n").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["gen"], "").status.code(), Some(2));
    let t = ok(&["gen", "--double-simplex", "3"], "");
    assert_eq!(run(&["verify"], &t).status.code(), Some(2));
    assert_eq!(run(&["partition", "--scheme", "odd-bary"], &t).status.code(), Some(2));
    assert_eq!(run(&["partition", "--scheme", "bogus"], &t).status.code(), Some(2));
    assert_eq!(run(&["--version"], "").status.code(), Some(0));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn json_output_with_out() {
    let t = ok(&["gen", "--double-simplex", "3"], "");
    let p = ok(&["partition", "--scheme", "pairs", "--blocks", "0,1/2,3"], &t);
    let path = tmp("verify.json");
    ok(&["verify", "--out", path.to_str().unwrap()], &p);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["tool"], "multisect 0.1.0");
    assert_eq!(v["validation"]["supports_multisection"], true);
}
