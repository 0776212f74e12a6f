use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubetti"))
}

fn here(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join(rel)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen_then_compute(shape: &str, compute_args: &[&str]) -> Output {
    let body = run(&["gen", shape]);
    assert!(body.status.success());
    run_with_stdin(&[&["compute"], compute_args].concat(), &body.stdout)
}

#[test]
fn golden_files() {
    for shape in ["shell", "ring", "two-components", "monkey"] {
        let vox = here(&format!("fixtures/{shape}.vox"));
        let out = run(&["compute", "--oracle", vox.to_str().unwrap()]);
        assert!(out.status.success(), "{shape}");
        let golden = std::fs::read_to_string(here(&format!("golden/{shape}.out"))).unwrap();
        assert_eq!(stdout(&out), golden, "{shape}");
    }
}

#[test]
fn piped_shell_and_ring() {
    let out = gen_then_compute("shell", &["--oracle"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "1 0 1 2");
    assert_eq!(lines.last(), Some(&"oracle: match"));

    let out = gen_then_compute("ring", &["--oracle", "-"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("1 1 0 0\n"));
}

#[test]
fn two_components_without_oracle() {
    let out = gen_then_compute("two-components", &[]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 0 0 2\ncritical: c0=2 c1=0 c2=0 monkey=0\n");
}

#[test]
fn random_body_matches_oracle() {
    let body = run(&["gen", "random", "--dims", "5,4,6", "--seed", "7", "--density", "0.5"]);
    let out = run_with_stdin(&["compute", "--oracle"], &body.stdout);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).ends_with("oracle: match\n"));
}

#[test]
fn dump_critical_csv() {
    let dir = std::env::temp_dir().join(format!("cubetti-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("ring.csv");
    let out = run(&[
        "compute",
        here("fixtures/ring.vox").to_str().unwrap(),
        "--dump-critical",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,y,z,class,is_double,pass"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert!(rows.iter().all(|r| r.len() == 6));
    assert_eq!(rows.iter().filter(|r| r[5] == "f" && r[3] == "index1").count(), 1);
    assert!(rows.iter().any(|r| r[5] == "h"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn no_preprocess_on_touching_body_fails() {
    let body = run(&["gen", "box", "--dims", "2,2,2"]);
    let out = run_with_stdin(&["compute", "--no-preprocess"], &body.stdout);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn no_preprocess_on_unstacked_body() {
    let text = "dim 3 3 3\n1 1 1\n";
    let out = run_with_stdin(&["compute", "--no-preprocess", "--oracle"], text.as_bytes());
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 0 0 1\ncritical: c0=1 c1=0 c2=0 monkey=0\noracle: match\n");
}

#[test]
fn parse_error_is_nonzero() {
    let out = run_with_stdin(&["compute"], b"dim 2 2 2\n5 0 0\n");
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn lut_fresh_build() {
    let out = run(&["lut"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 256);
    assert!(text.lines().any(|l| l == "0xE8 monkey"));
    assert!(text.lines().any(|l| l == "0x80 index0"));
    assert!(text.lines().any(|l| l == "0xFE index2"));
}

#[test]
fn lut_detects_corrupted_table() {
    let out = run(&["lut", "--against", here("fixtures/corrupted_table.txt").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0xE8"));
}

#[test]
fn bench_two_sizes() {
    let out = run(&["bench", "--sizes", "9,12", "--repeats", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,n_c,t_construct,t_rank");
    assert_eq!(lines.len(), 4);
    let slope = lines[3].strip_prefix("slope: ").unwrap();
    slope.parse::<f64>().unwrap();
}

#[test]
fn bad_dims_rejected() {
    let out = run(&["gen", "box", "--dims", "3,2"]);
    assert_eq!(out.status.code(), Some(2));
}
