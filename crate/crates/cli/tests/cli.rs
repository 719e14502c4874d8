use std::io::Write;
use std::process::{Command, Output, Stdio};

const PI: &str = "18 17 15 14 13 12 11 9 1 2 3 4 5 6 7 8 10 16";
const ORNAMENT: &str = "(1 2 2 1 2)(1 2 2)(1 2 1 2)(1 2 1 2)(1 2)";

fn gr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gr")).args(args).output().unwrap()
}

fn gr_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gr"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn map_examples() {
    let out = gr(&["map", "--blocks", "8,10", "--descending", "1", PI]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), ORNAMENT);
    assert!(stderr(&out).is_empty());

    let out = gr(&["map", "--blocks", "3", "1 2 3"]);
    assert_eq!(stdout(&out).trim_end(), "(1)(1)(1)");
    let out = gr(&["map", "--blocks", "2,2", "3 4 1 2"]);
    assert_eq!(stdout(&out).trim_end(), "(1 2)(1 2)");
}

#[test]
fn map_warns_outside_the_class() {
    let out = gr(&["map", "--blocks", "2,2", "2 1 4 3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), "(1 1)(2 2)");
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn map_reads_stdin() {
    let out = gr_stdin(&["map", "--blocks", "8,10", "--descending", "1"], &format!("{PI}\n"));
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), ORNAMENT);
}

#[test]
fn unmap_examples() {
    let out = gr(&["unmap", "--blocks", "8,10", "--descending", "1", ORNAMENT]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim_end(), PI);

    let out = gr(&["unmap", "--blocks", "2", "--descending", "", "(1)(1)"]);
    assert_eq!(stdout(&out).trim_end(), "1 2");

    let out = gr(&["unmap", "--blocks", "2,2", "(1 2 1 2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("condition 1"), "{}", stderr(&out));
}

#[test]
fn count_examples() {
    let out = gr(&["count", "--blocks", "2,2", "--descending", "1,2", "derangements"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "quantity\tmethod\tcount\nderangements\tpie\t3\nderangements\tgf\t3\n"
    );

    let out = gr(&["count", "--blocks", "2,2", "involutions"]);
    assert_eq!(stdout(&out), "quantity\tmethod\tcount\ninvolutions\tornaments\t3\n");

    let out = gr(&["count", "--blocks", "1,1,1,1", "derangements"]);
    assert!(stdout(&out).contains("derangements\tpie\t9\n"));
    assert!(stdout(&out).contains("derangements\tgf\t9\n"));

    let out = gr(&["count", "--blocks", "2,3", "cycle-type", "--cycle-type", "4,1"]);
    assert_eq!(stdout(&out), "quantity\tmethod\tcount\ncycle-type (4,1)\tornaments\t2\n");
}

#[test]
fn count_all_sums_to_the_multinomial() {
    let out = gr(&["count", "--blocks", "2,2", "--descending", "2", "all"]);
    assert!(out.status.success());
    let total: u64 = stdout(&out)
        .lines()
        .filter(|l| l.starts_with("cycle-type"))
        .map(|l| l.rsplit('\t').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 6);
}

#[test]
fn verify_passes() {
    let out = gr(&["verify", "--max-n", "5", "--max-k", "3"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("suite\tcases\tpassed\tfailed\n"));
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().skip(1).all(|l| l.ends_with("\t0")));

    assert!(gr(&["verify", "--max-n", "1"]).status.success());
}

#[test]
fn output_is_deterministic() {
    let args = ["count", "--blocks", "3,2,1", "--descending", "1,3", "all"];
    assert_eq!(gr(&args).stdout, gr(&args).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(gr(&["map", "--blocks", "2,2", "1 1 2 3"]).status.code(), Some(1));
    assert_eq!(gr(&["map", "--blocks", "0,2", "1 2"]).status.code(), Some(1));
    assert_eq!(gr(&["map", "--blocks", "2", "--descending", "3", "1 2"]).status.code(), Some(1));
    assert_eq!(gr(&["map", "--blocks", "2,2", "1 2 3"]).status.code(), Some(1));
    assert_eq!(gr(&["count", "--blocks", "2", "cycle-type"]).status.code(), Some(1));
    assert_eq!(gr(&["count", "--blocks", "3", "cycle-type", "--cycle-type", "2"]).status.code(), Some(1));
    assert_eq!(gr(&["verify", "--max-k", "0"]).status.code(), Some(1));
    assert_eq!(gr(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(gr(&["--help"]).status.code(), Some(0));
}
