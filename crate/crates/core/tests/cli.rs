use std::io::Write;
use std::process::{Command, Output, Stdio};

fn lcscount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lcscount"))
        .args(args)
        .output()
        .expect("spawn lcscount")
}

fn lcscount_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lcscount"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn lcscount");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> &str {
    std::str::from_utf8(&o.stdout).unwrap()
}

#[test]
fn json_counts_are_strings() {
    let out = lcscount(&[
        "--mode", "all", "--format", "json", "--text", "ab", "--text", "ba",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"m\":2,\"n\":2,\"lcs_length\":1,\"distinct_lcs_count\":\"2\",\"embedding_count\":\"2\",\"algorithm\":\"linear\",\"tokenization\":\"bytes\"}\n"
    );
}

#[test]
fn empty_text_input() {
    let out = lcscount(&["--text", "", "--text", "abc", "--mode", "distinct"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "distinct: 1\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn full_and_linear_print_the_same() {
    for mode in ["distinct", "embeddings", "all", "length,embeddings"] {
        let full = lcscount(&[
            "--mode",
            mode,
            "--algorithm",
            "full",
            "--text",
            "ABCBDAB",
            "--text",
            "BDCABA",
        ]);
        let linear = lcscount(&[
            "--mode",
            mode,
            "--algorithm",
            "linear",
            "--text",
            "ABCBDAB",
            "--text",
            "BDCABA",
        ]);
        assert_eq!(full.stdout, linear.stdout);
    }
    let full = lcscount(&[
        "--mode",
        "distinct",
        "--algorithm",
        "full",
        "--text",
        "ABCBDAB",
        "--text",
        "BDCABA",
    ]);
    assert_eq!(stdout(&full), "distinct: 3\n");
}

#[test]
fn oracle_subcommand_agrees() {
    for (a, b) in [
        ("ABCBDAB", "BDCABA"),
        ("aab", "ab"),
        ("", "xy"),
        ("abcabc", "cbacba"),
    ] {
        let dp = lcscount(&["--text", a, "--text", b]);
        let oracle = lcscount(&["oracle", "--text", a, "--text", b]);
        assert!(oracle.status.success());
        assert_eq!(dp.stdout, oracle.stdout, "{a} / {b}");
    }
}

#[test]
fn oracle_guard_exits_three() {
    let long = "ab".repeat(10);
    let out = lcscount(&[
        "oracle",
        "--text",
        &long,
        "--text",
        &long,
        "--mode",
        "embeddings",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(out.stdout.is_empty());
}

#[test]
fn lines_compare_whole_lines() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    std::fs::write(&a, "alpha\nbeta\ngamma\n").unwrap();
    std::fs::write(&b, "gamma\nalpha\nbeta\n").unwrap();
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());

    let lines = lcscount(&["--tokenize", "lines", "--file", a, "--file", b]);
    assert_eq!(stdout(&lines), "length: 2\ndistinct: 1\nembeddings: 1\n");

    // Byte-wise the two files share far more than two symbols.
    let bytes = lcscount(&["--mode", "length", "--file", a, "--file", b]);
    let len: usize = stdout(&bytes)
        .trim()
        .strip_prefix("length: ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(len > 2, "{len}");
}

#[test]
fn stdin_side() {
    let out = lcscount_with_stdin(
        &["--mode", "embeddings", "--text", "aaaa", "--file", "-"],
        b"aa",
    );
    assert_eq!(stdout(&out), "embeddings: 6\n");
    let both = lcscount_with_stdin(&["--file", "-", "--file", "-"], b"aa");
    assert_eq!(both.status.code(), Some(1));
}

#[test]
fn invalid_utf8_under_codepoints_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.bin");
    std::fs::write(&bad, [0x61, 0xff, 0x62]).unwrap();
    let bad = bad.to_str().unwrap();
    let out = lcscount(&["--tokenize", "codepoints", "--file", bad, "--text", "ab"]);
    assert_eq!(out.status.code(), Some(1));
    let bytes = lcscount(&["--mode", "length", "--file", bad, "--text", "ab"]);
    assert_eq!(stdout(&bytes), "length: 2\n");
}

#[test]
fn exit_codes() {
    assert_eq!(lcscount(&["--text", "a"]).status.code(), Some(1));
    assert_eq!(
        lcscount(&["--text", "a", "--text", "b", "--mode", ""])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(lcscount(&["--unknown"]).status.code(), Some(1));
    assert_eq!(
        lcscount(&["--file", "/no/such/file", "--text", "b"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bench_reports_workspace() {
    let out = lcscount(&["bench", "--len", "50", "--alphabet", "3", "--seed", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("m: 50\nn: 50\nalphabet: 3\nseed: 11\n"),
        "{text}"
    );
    assert!(text.contains("algorithm=full kind=distinct"));
    assert!(text.contains("length_cells=2601 count_cells=2601"));
    assert!(text.contains("length_cells=51 count_cells=51"));
    // Same seed, same sequences, same LCS.
    let again = lcscount(&["bench", "--len", "50", "--alphabet", "3", "--seed", "11"]);
    let length = |s: &str| {
        s.lines()
            .filter_map(|l| l.split(' ').find(|w| w.starts_with("lcs_length=")))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(length(text), length(stdout(&again)));

    let skipped = lcscount(&["bench", "--len", "50", "--max-full-cells", "100"]);
    assert!(stdout(&skipped).contains("algorithm=full kind=embeddings skipped=table-too-large"));
}
