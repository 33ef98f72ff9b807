use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const MAXIMAL: &str = "yzw^3+xyz^3+wxy^3+zwx^3";

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_delsarte"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| l.strip_prefix(key).filter(|r| r.starts_with(' ')).map(str::trim))
        .unwrap_or_else(|| panic!("no '{key}' line in:\n{text}"))
}

#[test]
fn analyze_maximal_quintic() {
    let o = run(&["analyze", MAXIMAL]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "m"), "15");
    assert_eq!(field(&s, "B"), "[0 1 3 7; 1 3 7 0; 3 7 0 1; 7 0 1 3]");
    assert!(field(&s, "|G|").starts_with("225"));
    assert_eq!(field(&s, "lambda"), "8");
    assert_eq!(field(&s, "h20"), "4");
    assert_eq!(field(&s, "rho"), "45");
    assert_eq!(field(&s, "orbit"), "(1,2,4,8)  size 8");
}

#[test]
fn analyze_json_round_trips() {
    let o = run(&["analyze", "x^5+xy^4+yz^4+w^5", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for key in ["m", "B", "g_order", "lambda", "h20", "picard", "orbits"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["picard"], 5);
    let echoed = v["polynomial"].as_str().unwrap();
    let again: Value = serde_json::from_str(&stdout(&run(&["analyze", echoed, "--json"]))).unwrap();
    assert_eq!(again, v);

    let m: Value = serde_json::from_str(&stdout(&run(&["analyze", MAXIMAL, "--json"]))).unwrap();
    assert_eq!((m["m"].as_u64(), m["g_order"].as_u64(), m["picard"].as_u64()), (Some(15), Some(225), Some(45)));
    assert_eq!(m["orbits"][0]["representative"], serde_json::json!([1, 2, 4, 8]));
}

#[test]
fn analyze_reports_filter_failures() {
    let o = run(&["analyze", "w^5+zw^4+yw^4+xz^4", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["h20"].as_u64().unwrap() < 4);
    assert!(v["picard"].is_null());
}

#[test]
fn analyze_exit_codes() {
    assert_eq!(code(&run(&["analyze", "x^5+x^5+y^5+z^5"])), 3);
    assert_eq!(code(&run(&["analyze", "xw^4+yw^4+zw^4+w^5"])), 3);
    let bad = run(&["analyze", "x^5 + + y^5"]);
    assert_eq!(code(&bad), 2);
    assert!(String::from_utf8_lossy(&bad.stderr).contains("byte 6"));
    assert_eq!(code(&run(&["analyze", "x^5+y^5+z^5"])), 2);
    assert_eq!(code(&run(&["analyze", "2x^5+y^5+z^5+w^5"])), 2);
    assert_eq!(code(&run(&["analyze", "x^5+y^5+z^5+v^5"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn fermat_surfaces() {
    let five = stdout(&run(&["fermat", "5"]));
    assert_eq!(field(&five, "rho"), "37");
    assert_eq!(field(&five, "lambda"), "16");
    assert!(field(&five, "orbits").starts_with("4 "));
    let six = stdout(&run(&["fermat", "6"]));
    assert_eq!(field(&six, "lambda"), "20");
    assert_eq!(field(&six, "rho"), "86");
    assert_eq!(field(&six, "b2"), "106");
    let three = stdout(&run(&["fermat", "3"]));
    assert_eq!((field(&three, "lambda"), field(&three, "rho")), ("0", "7"));
    assert_eq!(code(&run(&["fermat", "2"])), 2);
    assert_eq!(code(&run(&["fermat", "five"])), 2);
}

#[test]
fn zeta_of_the_maximal_quintic() {
    let o = run(&["zeta", MAXIMAL, "--prime", "31", "--verify"]);
    assert_eq!(code(&o), 0);
    let s = stdout(&o);
    assert_eq!(field(&s, "NS factor"), "(1 - 31*T)^45");
    assert!(field(&s, "transcendental factor").ends_with("(degree 8)"));
    assert!(field(&s, "transcendental factor").starts_with("1 - 8*T + 3868*T^2"));
    assert!(field(&s, "denominator").ends_with("(degree 55)"));
    assert_eq!(field(&s, "trace identity"), "holds");
    assert_eq!(field(&s, "#Y(F_q) + 36q"), field(&s, "1 + 45q + q^2 + sum"));
}

#[test]
fn zeta_rejections() {
    assert_eq!(code(&run(&["zeta", MAXIMAL, "--prime", "30"])), 2);
    assert_eq!(code(&run(&["zeta", MAXIMAL, "--prime", "7"])), 2);
    assert_eq!(code(&run(&["zeta", "x^5+y^5+z^5+w^5", "--prime", "11", "--verify"])), 2);
    let f = run(&["zeta", "x^5+y^5+z^5+w^5", "--prime", "11"]);
    assert_eq!(code(&f), 0);
    assert!(field(&stdout(&f), "denominator").ends_with("(degree 55)"));
    assert_eq!(field(&stdout(&f), "NS factor"), "(1 - 11*T)^37");
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn lattice_reports() {
    let s = stdout(&run(&["lattice"]));
    assert_eq!(field(&s, "curves"), "45");
    assert_eq!(field(&s, "determinant"), "202500 = 2^2 · 3^4 · 5^4");
    assert_eq!(field(&s, "rank"), "45");
    assert_eq!(field(&s, "signature"), "(1,44,0)");

    let dir = tempfile::tempdir().unwrap();
    let mut chain = String::from("# A9\ncurves:\n");
    for k in 1..=9 {
        chain.push_str(&format!("e{k} -2\n"));
    }
    chain.push_str("pairs:\n");
    for k in 1..9 {
        chain.push_str(&format!("e{k} e{} 1\n", k + 1));
    }
    let s = stdout(&run(&["lattice", &write(dir.path(), "a9.curves", &chain)]));
    assert_eq!(field(&s, "determinant"), "-10 = -2 · 5");
    assert_eq!(field(&s, "signature"), "(0,9,0)");

    let s = stdout(&run(&["lattice", &write(dir.path(), "empty.curves", "")]));
    assert_eq!(field(&s, "curves"), "0");

    assert_eq!(code(&run(&["lattice", &write(dir.path(), "bad.curves", "curves:\na\n")])), 2);
    assert_eq!(code(&run(&["lattice", &write(dir.path(), "dangling.curves", "curves:\na -2\npairs:\na b 1\n")])), 2);
    assert_eq!(code(&run(&["lattice", "/nonexistent/file"])), 2);
}

#[test]
fn enumerate_small_degrees() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d1.tsv");
    let o = run(&["enumerate", "--degree", "1", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("1 candidates"));
    let text = std::fs::read_to_string(&out).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 1);
    assert_eq!(code(&run(&["enumerate", "--degree", "3", "--golden"])), 2);
}

#[test]
fn enumerate_is_independent_of_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.tsv");
    let b = dir.path().join("b.tsv");
    let oa = run_env(&["enumerate", "--degree", "3", "--out", a.to_str().unwrap()], &[("DELSARTE_THREADS", "1")]);
    let ob = run_env(&["enumerate", "--degree", "3", "--out", b.to_str().unwrap()], &[("DELSARTE_THREADS", "3")]);
    assert_eq!((code(&oa), code(&ob)), (0, 0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let tail = |s: String| s.lines().skip(2).collect::<Vec<_>>().join("\n");
    assert_eq!(tail(stdout(&oa)), tail(stdout(&ob)));
    assert_eq!(code(&run_env(&["fermat", "5"], &[("DELSARTE_THREADS", "zero")])), 2);
}

#[test]
fn enumerate_quintics_against_the_table() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("d5.tsv");
    let o = run(&["enumerate", "--out", out.to_str().unwrap(), "--golden"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let s = stdout(&o);
    assert_eq!(field(&s, "spectrum"), "{1,5,13,17,19,21,23,25,27,29,31,33,35,37,39,41,43,45}");
    assert_eq!(field(&s, "rho 45 classes"), "1");
    assert_eq!(s.lines().filter(|l| l.starts_with("golden") && l.contains(" ok")).count(), 18);
    // Resuming does no new work and gives the same file.
    let before = std::fs::read(&out).unwrap();
    let again = run(&["enumerate", "--out", out.to_str().unwrap()]);
    assert!(stdout(&again).contains("classified 0 new"));
    assert_eq!(std::fs::read(&out).unwrap(), before);
}

#[test]
fn cm_types() {
    let s = stdout(&run(&["cmtype", MAXIMAL, "--weights", "1,3,7,0", "--order", "15"]));
    assert_eq!(field(&s, "H20 exponents"), "{1,2,4,8}");
    assert_eq!(field(&s, "CM-type"), "yes");
    let s = stdout(&run(&["cmtype", MAXIMAL, "--weights", "1,3,7,0", "--order", "15", "--rho-lower", "38"]));
    assert_eq!((field(&s, "dim T"), field(&s, "rho")), ("8", "45"));
    let s = stdout(&run(&["cmtype", MAXIMAL, "--weights", "1,3,7,0", "--order", "15", "--rho-lower", "37"]));
    assert!(field(&s, "dim T").starts_with("not determined"));
    let s = stdout(&run(&["cmtype", "x^5+y^5+z^5+w^5", "--weights", "1,1,1,1", "--order", "5"]));
    assert!(field(&s, "CM-type").starts_with("no"));
    assert_eq!(code(&run(&["cmtype", MAXIMAL, "--weights", "1,0,0,0", "--order", "15"])), 3);
    assert_eq!(code(&run(&["cmtype", MAXIMAL, "--weights", "1,3", "--order", "15"])), 2);
    let neg = stdout(&run(&["cmtype", MAXIMAL, "--weights=-14,3,7,0", "--order", "15"]));
    assert_eq!(field(&neg, "H20 exponents"), "{1,2,4,8}");
}
