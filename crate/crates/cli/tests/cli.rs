use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_rs-plotkin");
const SMALL: [&str; 10] = ["--m", "4", "--n", "15", "--ka", "11", "--kb", "9", "--kz", "5"];

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn with_small(cmd: &str) -> Vec<&str> {
    let mut v = vec![cmd];
    v.extend(SMALL);
    v
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn encode_corrupt_decode_round_trip() {
    let msg: Vec<String> = (0..25).map(|i| format!("{:x}", i % 16)).collect();
    let msg = msg.join(" ");
    let enc = run(&with_small("encode"), &msg);
    assert!(enc.status.success());
    let mut cw: Vec<String> = stdout(&enc).split_whitespace().map(String::from).collect();
    assert_eq!(cw.len(), 45);
    let clean = cw.join(" ");
    for p in [0, 7, 16, 30, 44] {
        let v = u8::from_str_radix(&cw[p], 16).unwrap() ^ 0x5;
        cw[p] = format!("{v:x}");
    }
    let dec = run(&with_small("decode"), &cw.join(" "));
    assert!(dec.status.success());
    let out = stdout(&dec);
    assert!(out.contains("status: success"), "{out}");
    assert!(out.contains(&format!("message: {msg}")), "{out}");
    assert!(out.contains(&format!("codeword: {clean}")), "{out}");
    assert!(out.contains("tau_min: 5"), "{out}");
    assert!(out.lines().any(|l| l.starts_with("candidate") && l.ends_with('*')));
}

#[test]
fn malformed_symbol_is_named() {
    let mut toks = vec!["0"; 25];
    toks[3] = "zz";
    let o = run(&with_small("encode"), &toks.join(" "));
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("\"zz\"") && err.contains("position 3"), "{err}");
}

#[test]
fn wrong_symbol_count_and_usage_errors() {
    let o = run(&with_small("decode"), "1 2 3");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["bogus"], "").status.code(), Some(1));
    assert_eq!(run(&["simulate", "--model", "gauss:1"], "").status.code(), Some(1));
    assert_eq!(run(&["params", "--ka", "10", "--kb", "20", "--kz", "5"], "").status.code(), Some(1));
    assert_eq!(run(&["--help"], "").status.code(), Some(0));
}

#[test]
fn simulate_writes_csv_to_stdout() {
    let mut args = with_small("simulate");
    args.extend(["--model", "qsc:0.05", "--trials", "200", "--seed", "3", "--sequential"]);
    let o = run(&args, "");
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("model,param,trials,successes,miscorrections,failures,fer,mds_reference")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..3], &["qsc", "0.050000", "200"]);
}

#[test]
fn verify_tiny_passes() {
    let o = run(&["verify", "--tiny"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 4, "{out}");
}
