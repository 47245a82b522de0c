use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sweep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sweep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn sweep_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sweep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sweeps_the_worked_example() {
    let o = sweep(&["sweep", "--mod", "5", "3113214"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1331421\n");
    let o = sweep(&["unsweep", "--mod", "5", "1331421"]);
    assert_eq!(stdout(&o), "3113214\n");
    let o = sweep(&["presweep", "--mod", "5", "3113214"]);
    assert_eq!(stdout(&o), "1|33|·|1|421\n");
    let o = sweep(&["--ascii", "presweep", "--mod", "5", "3113214"]);
    assert_eq!(stdout(&o), "1|33||1|421\n");
}

#[test]
fn empty_word_prints_empty_line() {
    let o = sweep(&["sweep", "--mod", "5", ""]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "\n");
}

#[test]
fn sweep_then_unsweep_round_trips_byte_for_byte() {
    let mut words = String::new();
    for i in 0..3u32.pow(5) {
        let mut n = i;
        let mut w = String::new();
        for _ in 0..5 {
            w.push(char::from(b'0' + (n % 3) as u8));
            n /= 3;
        }
        words.push_str(&w);
        words.push('\n');
    }
    let swept = sweep_stdin(&["sweep", "-m", "3", "-"], &words);
    assert_eq!(swept.status.code(), Some(0));
    let back = sweep_stdin(&["unsweep", "-m", "3", "-"], &stdout(&swept));
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), words);
}

#[test]
fn latest_schedule() {
    let o = sweep(&["schedule", "latest", "--hours", "5", "1,3,3,1,4,2,1"]);
    assert_eq!(stdout(&o), "1,2,2,4,5,5,5\n");
    let o = sweep(&["schedule", "all", "--hours", "5", "1,3,3,1,4,2,1"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 5);
    assert_eq!(text.lines().next(), Some("1,1,2,2,3,4,5"));
    assert_eq!(text.lines().last(), Some("1,2,2,4,5,5,5  successful"));
    let o = sweep(&[
        "--json",
        "schedule",
        "check",
        "--hours",
        "5",
        "--starts",
        "1,1,2,2,3,4,5",
        "1,3,3,1,4,2,1",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["successful"], false);
    assert_eq!(v["starts"], serde_json::json!([1, 1, 2, 2, 3, 4, 5]));
    assert_eq!(v["watch"], serde_json::json!([3, 1, 7]));
}

#[test]
fn lattice_exports() {
    let o = sweep(&["--json", "lattice", "-m", "5", "1331421"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    assert_eq!(v["covers"].as_array().unwrap().len(), 5);
    let top = v["top"].as_u64().unwrap() as usize;
    assert_eq!(v["nodes"][top]["partition"], "1|33||1|421");
    let o = sweep(&["lattice", "-m", "5", "1331421", "--dot"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches(" -> ").count(), 5);
}

#[test]
fn constructions_and_arrays() {
    let o = sweep(&["leftmost", "-m", "5", "1331421"]);
    assert_eq!(stdout(&o), "13|31|4|2|1\n");
    let o = sweep(&["rightmost", "-m", "5", "1331421", "--trace"]);
    assert_eq!(stdout(&o).lines().count(), 12);
    let o = sweep(&["successful", "-m", "5", "13|31|4|2|1"]);
    assert_eq!(stdout(&o), "1|33|·|1|421\n");
    let o = sweep(&["--ascii", "array", "-m", "5", "1|33||1|421"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("# . . . .  1"));
    assert_eq!(text.lines().last(), Some("= = = = ="));
}

#[test]
fn integer_words_and_zeta() {
    let o = sweep(&["zsweep", "3,-2,3,-2,-2"]);
    assert_eq!(stdout(&o), "3,3,-2,-2,-2\n");
    let o = sweep(&["unzsweep", "--content", "3:2,-2:3", "3,3,-2,-2,-2"]);
    assert_eq!(stdout(&o), "3,-2,3,-2,-2\n");
    let o = sweep(&["zeta", "-a", "3", "-b", "-2", "3,-2,3,-2,-2"]);
    assert_eq!(stdout(&o), "3,3,-2,-2,-2\n");
    let o = sweep(&["unzeta", "-a", "3", "-b", "-2", "3,3,-2,-2,-2"]);
    assert_eq!(stdout(&o), "3,-2,3,-2,-2\n");
    let o = sweep(&["dyck", "list", "-a", "3", "-b", "-5"]);
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = sweep(&["dyck", "filter", "1,-1", "-1,1"]);
    assert_eq!(stdout(&o), "1,-1\n");
}

#[test]
fn exit_statuses() {
    assert_eq!(sweep(&["sweep", "--mod", "5", "9"]).status.code(), Some(1));
    assert_eq!(
        sweep(&["zeta", "-a", "3", "-b", "-2", "3,-2,-2,3,-2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sweep(&["unpresweep", "-m", "5", "13|31|4|2|1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sweep(&["sweep"]).status.code(), Some(2));
    assert_eq!(sweep(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        sweep(&["schedule", "latest", "--hours", "3", "1,3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_runs() {
    let o = sweep(&["verify", "bijective", "-m", "3", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("81 words"));
    let o = sweep(&["--json", "verify", "theorems", "-m", "3", "-n", "2..=4"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["passed"], true);
    }
    let o = sweep(&["verify", "zeta", "3,-2", "3,-5"]);
    assert_eq!(o.status.code(), Some(0));
    let o = sweep(&["verify", "bijective", "-m", "9", "-n", "9"]);
    assert_eq!(o.status.code(), Some(1));
}
