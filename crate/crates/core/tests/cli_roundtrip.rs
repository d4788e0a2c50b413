//! Drive the built binary end to end.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_treedepth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli_roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn famous(name: &str) -> String {
    format!("{}/instances/famous/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn petersen_edge_list() {
    let text = std::fs::read_to_string(famous("petersen.gr")).unwrap();
    let edges: String = text
        .lines()
        .filter(|l| !l.starts_with('c') && !l.starts_with('p'))
        .map(|l| format!("{l}\n"))
        .collect();
    let path = scratch("petersen.edgelist");
    std::fs::write(&path, edges).unwrap();
    let o = run(&["solve", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
}

#[test]
fn grid_forest_passes_verify() {
    let graph = scratch("grid5.gr");
    let o = run(&["gen", "square_grid", "5", "--format", "dimacs"]);
    std::fs::write(&graph, &o.stdout).unwrap();
    let o = run(&["solve", graph.to_str().unwrap(), "--print-forest"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("9"));
    assert_eq!(lines.clone().count(), 25);
    let forest = scratch("grid5.forest");
    std::fs::write(&forest, out.lines().skip(1).map(|l| format!("{l}\n")).collect::<String>()).unwrap();
    let o = run(&["verify", graph.to_str().unwrap(), forest.to_str().unwrap(), "--expect-depth", "9"]);
    assert_eq!(stdout(&o), "valid depth 9\n");
    assert_eq!(o.status.code(), Some(0));
    // The full solve output, count line included, is accepted too.
    std::fs::write(&forest, &out).unwrap();
    assert_eq!(run(&["verify", graph.to_str().unwrap(), forest.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn broken_forest_fails_verify() {
    let graph = scratch("path4.txt");
    std::fs::write(&graph, "1 2\n2 3\n3 4\n").unwrap();
    let forest = scratch("path4.forest");
    std::fs::write(&forest, "0 0 0 0\n").unwrap();
    let o = run(&["verify", graph.to_str().unwrap(), forest.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn empty_graph_and_input_errors() {
    let empty = scratch("empty.edgelist");
    std::fs::write(&empty, "# nothing here\n").unwrap();
    assert_eq!(stdout(&run(&["solve", empty.to_str().unwrap()])), "0\n");

    let looped = scratch("loop.edgelist");
    std::fs::write(&looped, "1 2\n2 2\n").unwrap();
    let o = run(&["solve", looped.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));
    assert_eq!(run(&["solve", "--timeout", "1"]).status.code(), Some(2));
}

#[test]
fn timeout_exit_code() {
    let o = run(&["solve", &famous("holt.gr"), "--node-limit", "1000"]);
    assert_eq!(o.status.code(), Some(3));
    let line = stdout(&o);
    assert!(line.starts_with("TIMEOUT k>="), "{line}");
    let k: usize = line.trim().trim_start_matches("TIMEOUT k>=").parse().unwrap();
    assert!(k <= 13);
}

#[test]
fn stdin_input_and_stats() {
    use std::io::Write;
    let mut child = bin()
        .args(["solve", "-", "--stats"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"a b\nb c\nc a\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "3\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("nodes="));
}

#[test]
fn debug_lists_orbits_and_candidates() {
    let o = run(&["debug", &famous("petersen.gr"), "--no-order"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("orbits: {1 2 3 4 5 6 7 8 9 10}"), "{out}");
    assert!(out.contains("root candidates: 1\n"), "{out}");
}

#[test]
fn gen_is_reproducible() {
    let a = run(&["gen", "gnp", "16", "0.3", "--seed", "42"]);
    let b = run(&["gen", "gnp", "16", "0.3", "--seed", "42"]);
    let c = run(&["gen", "gnp", "16", "0.3", "--seed", "43"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}
