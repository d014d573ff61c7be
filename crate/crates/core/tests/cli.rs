use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_solidtorus"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child =
        bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(format!("{name}.knot"))
}

fn scratch(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("solidtorus-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dotted_loop_bracket() {
    let o = run(&["bracket", corpus("dotted-loop").to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1*t^1\n");
}

#[test]
fn bracket_from_stdin_as_object() {
    let o = run_stdin(&["--format", "object", "bracket", "-"], "X 0: 1 1 2 2\nouter: 0.1\n");
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.is_array() && v.as_array().unwrap().len() == 1);
}

#[test]
fn trefoil_jones_in_q() {
    let o = run(&["jones", "--q", corpus("trefoil").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("q^4") && text.contains("q^3"), "{text}");
}

#[test]
fn verify_trefoil() {
    let o = run(&["verify", corpus("trefoil").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(row[1], "3");
    assert_eq!(row[5], "12");
    assert!(row[8..].iter().all(|s| *s == "pass"), "{text}");
}

#[test]
fn classify_lists_every_crossing() {
    let o = run(&["classify", corpus("sum-twist-split").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 8);
    assert!(text.contains("6: dotted-irreducible"));
    assert!(text.ends_with("dotted-reduced: true\n"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["bracket"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "bracket", "x"]).status.code(), Some(2));
}

#[test]
fn computation_errors_exit_1() {
    let o = run(&["bracket", "/nonexistent/diagram.knot"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = run_stdin(&["bracket", "-"], "X 0: 1 2 1 2\n");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--max-states", "4", "bracket", corpus("trefoil").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["rewrite", "untwist", "--crossing", "0", corpus("kink-irreducible").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generate_is_deterministic() {
    let a = run(&["--seed", "9", "generate", "--count", "5", "--puncture", "adversarial"]);
    let b = run(&["--seed", "9", "generate", "--count", "5", "--puncture", "adversarial"]);
    let c = run(&["--seed", "10", "generate", "--count", "5", "--puncture", "adversarial"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(stdout(&a).matches("---").count(), 4);
}

#[test]
fn batch_identical_across_threads() {
    let dir = scratch("batch");
    let set = dir.join("set.knot");
    let g = run(&["--seed", "3", "generate", "--count", "30", "--max-crossings", "11", "--non-alternating"]);
    std::fs::write(&set, &g.stdout).unwrap();
    let (trefoil, split) = (corpus("trefoil"), corpus("sum-twist-split"));
    let files = [set.to_str().unwrap(), trefoil.to_str().unwrap(), split.to_str().unwrap()];
    let mut outputs = Vec::new();
    for threads in ["1", "2", "8"] {
        let csv = dir.join(format!("r{threads}.csv"));
        let json = dir.join(format!("r{threads}.json"));
        let mut args = vec!["--seed", "3", "--threads", threads, "batch", "--csv", csv.to_str().unwrap()];
        args.extend(["--json", json.to_str().unwrap()]);
        args.extend(files);
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        outputs.push((o.stdout, std::fs::read(&csv).unwrap(), std::fs::read(&json).unwrap()));
    }
    assert!(outputs.iter().all(|o| *o == outputs[0]));
    let csv = String::from_utf8(outputs[0].1.clone()).unwrap();
    assert!(csv.starts_with("# solidtorus ") && csv.lines().next().unwrap().ends_with("seed=3"));
    assert_eq!(csv.lines().count(), 2 + 32);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn batch_reports_unreadable_inputs() {
    let dir = scratch("bad");
    let bad = dir.join("bad.knot");
    std::fs::write(&bad, "X 0: 1 2 3\n").unwrap();
    let o = run(&["batch", bad.to_str().unwrap(), corpus("trefoil").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).lines().count(), 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn rewrite_reports_factor_and_result_parses() {
    let o = run(&["rewrite", "r1", "--edge", "2", "--sign", "-", corpus("trefoil").to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("# expected bracket factor: -1*A^-3"), "{text}");
    assert!(text.contains("# crossing delta: 1"));
    let j = run_stdin(&["jones", "-"], &text);
    let base = run(&["jones", corpus("trefoil").to_str().unwrap()]);
    assert_eq!(j.stdout, base.stdout);

    let o = run(&["--format", "object", "rewrite", "loop", "--dotted", corpus("hopf").to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["crossing_delta"], 0);
}
