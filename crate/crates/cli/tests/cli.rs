use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dualbraid(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dualbraid"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = dualbraid(args, None);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn rnf_golden() {
    assert_eq!(stdout_of(&["rnf", "-n", "4", "s1 s3^-2 s2 s3"]), "d1.4^-1 | a1.2 a1.4 a2.3 a1.2\n");
    assert_eq!(stdout_of(&["rnf", "-n", "3", ""]), "| \n");
    assert_eq!(stdout_of(&["rnf", "-n", "4", "a1.2 a2.3 a3.4 a1.2 a2.3 a3.4"]), "| a1.2 a1.4 a1.2 a1.3 a1.2 a1.2\n");
}

#[test]
fn nf_golden() {
    assert_eq!(
        stdout_of(&["nf", "-n", "4", "s1 s3^-2 s2 s3"]),
        "a1.4 d1.3^-1 a2.3 a1.2  # sigma3-positive, case 6.10/3\n"
    );
    assert_eq!(stdout_of(&["nf", "-n", "4", "--sigma", "s1 s3^-2 s2 s3"]), "s1 s2 s3 s2^-1 s1^-1 s2^-1 s1^-1 s2 s1\n");
    assert_eq!(stdout_of(&["nf", "-n", "2", "s1^-3"]), "d1.2^-3  # sigma1-negative\n");
}

#[test]
fn nf_trace() {
    let out = stdout_of(&["nf", "-n", "4", "--trace", "s1 s3^-2 s2 s3"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines,
        [
            "a1.4 d1.3^-1 a2.3 a1.2  # sigma3-positive, case 6.10/3",
            "# rnf d1.4^-1 | a1.2 a1.4 a2.3 a1.2",
            "# split w4=a2.3 ; w3=a2.3 ; w2= ; w1=a2.3 a1.2",
            "# n=4 case 6.10/3",
        ]
    );
}

#[test]
fn split_sign_compare() {
    assert_eq!(stdout_of(&["split", "-n", "4", "a1.2 a1.4 a2.3 a1.2"]), "w4=a2.3 ; w3=a2.3 ; w2= ; w1=a2.3 a1.2\n");
    assert_eq!(stdout_of(&["sign", "-n", "4", "s1 s3^-2 s2 s3"]), "+3\n");
    assert_eq!(stdout_of(&["sign", "-n", "3", "s2^-1 s1"]), "-2\n");
    assert_eq!(stdout_of(&["sign", "-n", "3", "s1 s2 s1 s2^-1 s1^-1 s2^-1"]), "0\n");
    assert_eq!(stdout_of(&["compare", "-n", "3", "s1", "s2"]), "<\n");
    assert_eq!(stdout_of(&["compare", "-n", "3", "s2", "s1"]), ">\n");
    assert_eq!(stdout_of(&["compare", "-n", "3", "s1 s2 s1", "s2 s1 s2"]), "=\n");
}

#[test]
fn batch_keeps_line_order() {
    let input = "s1\ns1^-1\n\ns2 s1^-1\ns1 s2 s1 s2^-1 s1^-1 s2^-1\n";
    let out = dualbraid(&["sign", "-n", "3"], Some(input));
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "+1\n-1\n0\n+2\n0\n");

    let out = dualbraid(&["compare", "-n", "3"], Some("s1 , s2\ns2,s1\n"));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "<\n>\n");
}

#[test]
fn batch_reports_bad_lines_in_place() {
    let out = dualbraid(&["rnf", "-n", "3"], Some("s1\nx9\ns2\n"));
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "| a1.2\nerror\n| a2.3\n");
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["rnf", "-n", "4", "s4"][..],
        &["rnf", "-n", "1", "s1"],
        &["nf", "-n", "3", "s1^"],
        &["split", "-n", "3", "s1^-1"],
        &["frobnicate"],
        &["rnf"],
    ] {
        assert_eq!(dualbraid(args, None).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn verify_golden() {
    let out = stdout_of(&["verify", "-n", "5", "--count", "500", "--maxlen", "30", "--seed", "7"]);
    assert_eq!(out.lines().last(), Some("PASS (all suites)"), "{out}");
}

#[test]
fn bench_prints_table_and_slope() {
    let out = stdout_of(&["bench", "-n", "4", "--from", "20", "--steps", "3", "--reps", "1"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 5, "{out}");
    assert!(lines[1].trim_start().starts_with("20 "));
    assert!(lines[4].starts_with("slope "));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "-n", "4", "--count", "50", "--maxlen", "15", "--seed", "3"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}
