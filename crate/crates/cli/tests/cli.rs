use std::io::Write;
use std::process::{Command, Output, Stdio};

const HILL: &str = "c up and over, or the flat detour
p ec 3 3
b 4 4
s 1
t 3
a 1 2 3
a 2 3 -3
a 1 3 2
";

const LOOP: &str = "p ec 3 3
b 3 3
a 1 2 2
a 2 3 -3
a 3 2 1
";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_voltpath"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_takes_the_hill() {
    let o = run(&["solve"], HILL);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "vertex\tdelta\talpha\tpred\n1\t0\t4\t-\n2\t3\t1\t1\n3\t0\t4\t2\n\npath\t1\t2\t3\n"
    );
}

#[test]
fn json_output() {
    let o = run(&["solve", "--format", "json"], HILL);
    assert_eq!(
        stdout(&o),
        "{\"columns\":[\"vertex\",\"delta\",\"alpha\",\"pred\"],\"path\":[1,2,3],\"rows\":[[1,0,4,\"-\"],[2,3,1,1],[3,0,4,2]]}\n"
    );
}

#[test]
fn algorithms_print_the_same_bytes() {
    let gen = run(&["gen", "--n", "60", "--m", "240", "--battery", "500", "--seed", "9"], "");
    assert_eq!(gen.status.code(), Some(0));
    let problem = stdout(&gen);
    let ebf = run(&["allpairs", "--algorithm", "ebf"], &problem);
    let dij = run(&["allpairs", "--algorithm", "edijkstra"], &problem);
    assert_eq!(ebf.status.code(), Some(0));
    assert_eq!(ebf.stdout, dij.stdout);
    assert_eq!(stdout(&ebf).lines().count(), 61);
}

#[test]
fn generator_is_deterministic() {
    let args = ["gen", "--n", "20", "--m", "50", "--seed", "4"];
    assert_eq!(run(&args, "").stdout, run(&args, "").stdout);
    assert_ne!(run(&args, "").stdout, run(&["gen", "--n", "20", "--m", "50", "--seed", "5"], "").stdout);
}

#[test]
fn beta_toward_target() {
    let o = run(&["beta", "--target", "3"], HILL);
    assert_eq!(stdout(&o), "vertex\tbeta\n1\t2\n2\t0\n3\t0\n");
}

#[test]
fn negative_cycle_exit_code() {
    let o = run(&["solve", "--source", "1"], LOOP);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative cycle"));
}

#[test]
fn parse_error_exit_code() {
    let o = run(&["solve", "--source", "1"], "p ec 2 1\na 1 3 1\n");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn unreachable_target_exit_code() {
    let o = run(&["solve", "--battery", "1"], HILL);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn check_reports_agreement() {
    let o = run(&["check"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "200/200 agree\n");
}

#[test]
fn usage_error_exit_code() {
    let o = run(&["solve", "--algorithm", "fastest"], HILL);
    assert_eq!(o.status.code(), Some(2));
}
