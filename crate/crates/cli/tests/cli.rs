use std::process::{Command, Output};

fn lmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_generator() {
    let o = lmod(&["eval", "a"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("[1 1 0]\n[0 1 0]\n[0 0 1]\n"), "{s}");
    assert!(!s.contains("in ker Psi"));
}

#[test]
fn eval_kernel_element_is_flagged() {
    let o = lmod(&["eval", "(b c)^6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("in ker Psi"));
}

#[test]
fn eval_mod_k() {
    let o = lmod(&["eval", "c^2", "--mod", "3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("(mod 3)"), "{s}");
    assert!(!s.contains("in ker"));
    assert!(stdout(&lmod(&["eval", "c^3", "--mod", "3"])).contains("in ker Psi_3"));
}

#[test]
fn parse_error_exits_nonzero() {
    let o = lmod(&["eval", "q"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot parse word"));
}

#[test]
fn lift_verdicts() {
    let c = stdout(&lmod(&["lift", "c", "--k", "2"]));
    assert!(c.contains("not liftable"), "{c}");
    assert!(c.contains("v = (0, 1)"), "{c}");
    let c2 = stdout(&lmod(&["lift", "c^2", "--k", "2"]));
    assert!(c2.starts_with("liftable"), "{c2}");
    let i = stdout(&lmod(&["lift", "i", "--k", "7"]));
    assert!(i.starts_with("liftable"), "{i}");
    assert!(!lmod(&["lift", "c", "--k", "1"]).status.success());
}

#[test]
fn reduced_gens() {
    let o = lmod(&["gens", "--k", "2", "--reduced"]);
    assert!(o.status.success());
    let labels: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().next().unwrap().to_string())
        .collect();
    assert_eq!(labels, ["a", "b", "c^2", "i"]);
    assert!(!lmod(&["gens", "--k", "4", "--reduced"]).status.success());
}

#[test]
fn full_gens_count() {
    let o = lmod(&["gens", "--k", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 5 + 9);
    assert!(!stdout(&o).contains("NOT"));
}

#[test]
fn index_three() {
    let o = lmod(&["index", "--k", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("9"));
}

#[test]
fn maximal_table() {
    let o = lmod(&["maximal", "--k-range", "2..12"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let maximal: Vec<u32> = s
        .lines()
        .skip(1)
        .filter_map(|l| {
            let mut f = l.split_whitespace();
            let k: u32 = f.next()?.parse().ok()?;
            (f.next()? == "true").then_some(k)
        })
        .collect();
    assert_eq!(maximal, [2, 3, 5, 7, 11]);
    assert!(s.contains("<a, b, c^3, i>"), "{s}");
    assert!(!lmod(&["maximal", "--k-range", "5..3"]).status.success());
    assert!(!lmod(&["maximal", "--k-range", "1..3"]).status.success());
}

#[test]
fn verify_suites() {
    let eq2 = lmod(&["verify", "--suite", "eq2"]);
    assert!(eq2.status.success());
    let s = stdout(&eq2);
    assert!(s.contains("psi"));
    assert!(s.contains("rewrite-script"));
    assert!(!s.contains("FAIL"));

    let k = lmod(&["verify", "--suite", "kernel", "--window", "5"]);
    assert!(k.status.success());
    assert_eq!(
        stdout(&k)
            .lines()
            .filter(|l| l.starts_with("PASS  kernel("))
            .count(),
        121
    );

    assert!(
        lmod(&["verify", "--suite", lmod_core::suites::MATRICES_ALIAS])
            .status
            .success()
    );
    assert!(!lmod(&["verify", "--suite", "bogus"]).status.success());
}

#[test]
fn verify_json_round_trips() {
    let o = lmod(&["verify", "--suite", "all", "--format", "json"]);
    assert!(o.status.success());
    let report = lmod_core::report::Report::parse_json_lines(&stdout(&o)).unwrap();
    assert_eq!(report.suite, "all");
    assert_eq!(report.counts().fail, 0);
    assert!(report.counts().pass > 200);
}

#[test]
fn deterministic_output() {
    let a = stdout(&lmod(&["verify", "--suite", "schreier", "--k", "3"]));
    let b = stdout(&lmod(&["verify", "--suite", "schreier", "--k", "3"]));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("suite "))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn thread_count_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_lmod"))
        .args(["index", "--k", "4"])
        .env("LMOD_THREADS", "1")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("16"));
    let bad = Command::new(env!("CARGO_BIN_EXE_lmod"))
        .args(["index", "--k", "4"])
        .env("LMOD_THREADS", "many")
        .output()
        .unwrap();
    assert!(!bad.status.success());
}

#[test]
fn decompose_and_replay() {
    let o = lmod(&["decompose", "--k", "2", "1 0 0, 0 1 0, 0 2 1"]);
    assert!(o.status.success());
    assert!(!lmod(&["decompose", "--k", "2", "1 1 0, 0 1 0, 0 1 1"])
        .status
        .success());

    let script = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/scripts/eq2.rws");
    let r = lmod(&[
        "replay",
        "--from",
        "(b c)^6",
        "--to",
        "(c^2 b)^4",
        "--script",
        script,
    ]);
    assert!(r.status.success(), "{}", stdout(&r));
    let wrong = lmod(&[
        "replay",
        "--from",
        "(b c)^6",
        "--to",
        "(c^3 b)^3",
        "--script",
        script,
    ]);
    assert_eq!(wrong.status.code(), Some(1));
}
