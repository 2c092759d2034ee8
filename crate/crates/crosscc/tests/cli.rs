use std::process::{Command, Output};

fn crosscc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscc")).args(args).env_remove("CROSSCC_ORDER").env_remove("CROSSCC_JSON").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn parse_errors_exit_64() {
    assert_eq!(crosscc(&["sturm", "x^^2"]).status.code(), Some(64));
    assert_eq!(crosscc(&["repro", "no-such-claim"]).status.code(), Some(64));
    assert_eq!(crosscc(&["--order", "weird", "sturm", "x"]).status.code(), Some(64));
    assert_eq!(crosscc(&["frobnicate"]).status.code(), Some(64));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "vars: x\nx + * 2\n").unwrap();
    assert_eq!(crosscc(&["gb", bad.to_str().unwrap()]).status.code(), Some(64));
}

#[test]
fn sturm_counts_factored_polynomial() {
    let o = crosscc(&["sturm", "(x - 1)*(x - 2)^2*(x^2 + 1)*(x + 3)", "--lo", "-5", "--hi", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "3");
    let o = crosscc(&["sturm", "(x - 1)*(x - 2)^2*(x^2 + 1)*(x + 3)", "--lo", "1", "--hi", "2"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn dimension_of_files() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "vars: a, b, c, d\n").unwrap();
    assert_eq!(stdout(&crosscc(&["dim", empty.to_str().unwrap()])).trim(), "4");
    let cubic = dir.path().join("cubic.txt");
    std::fs::write(&cubic, "vars: x, y, z\nx^2 - y\ny^2 - z*x\n").unwrap();
    assert_eq!(stdout(&crosscc(&["dim", cubic.to_str().unwrap()])).trim(), "1");
    // dimension needs a graded order
    assert_ne!(crosscc(&["--order", "lex", "dim", cubic.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn environment_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("i.txt");
    std::fs::write(&f, "vars: x, y\nx^2 - y\nx*y - 1\n").unwrap();
    let lex = Command::new(env!("CARGO_BIN_EXE_crosscc")).args(["--order", "degrevlex", "gb", f.to_str().unwrap()]).env("CROSSCC_ORDER", "lex").output().unwrap();
    let direct = crosscc(&["--order", "lex", "gb", f.to_str().unwrap()]);
    assert!(lex.status.success());
    assert_eq!(stdout(&lex), stdout(&direct));
    assert_ne!(stdout(&lex), stdout(&crosscc(&["gb", f.to_str().unwrap()])));
}

#[test]
fn gb_output_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("i.txt");
    std::fs::write(&f, "vars: x, y, z\nx*y - z\ny*z - x\nx*z - y\n").unwrap();
    let once = stdout(&crosscc(&["gb", f.to_str().unwrap()]));
    let g = dir.path().join("g.txt");
    std::fs::write(&g, &once).unwrap();
    assert_eq!(stdout(&crosscc(&["gb", g.to_str().unwrap()])), once);
}

#[test]
fn json_report_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let read = |name: &str| {
        let p = dir.path().join(name);
        let o = crosscc(&["--json", p.to_str().unwrap(), "repro", "vortex"]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for c in v["certificates"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let (a, b) = (read("a.json"), read("b.json"));
    assert_eq!(a, b);
    assert_eq!(a["overall"], "certified");
}
