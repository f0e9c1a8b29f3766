use std::fs;
use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

use tempfile::TempDir;

fn oppm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oppm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

fn gen(dir: &Path, extra: &[&str]) {
    let mut args = vec!["gen", "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    stdout(&oppm(&args));
}

#[test]
fn match_example() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.txt", "10 50 30 60 40\n");
    let p = write(dir.path(), "p.txt", "1 3 2\n");
    for algo in ["duel", "kmp", "naive"] {
        let out = oppm(&["match", "--algo", algo, "--text", &t, "--pattern", &p]);
        assert_eq!(stdout(&out), "1\n3\n", "{algo}");
    }
}

#[test]
fn match_stats_go_to_stderr() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.txt", "10 50 30 60 40\n");
    let p = write(dir.path(), "p.txt", "1 3 2\n");
    let out = oppm(&["match", "--stats", "--text", &t, "--pattern", &p]);
    assert_eq!(stdout(&out), "1\n3\n");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("matches: 2") && err.contains("comparisons: "));
}

#[test]
fn match_2d_whole_text() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "m.txt", "3 2\n5 1 9\n2 8 4\n");
    for algo in ["duel", "reduction2d", "naive"] {
        let out = oppm(&[
            "match",
            "--dim",
            "2",
            "--algo",
            algo,
            "--text",
            &m,
            "--pattern",
            &m,
        ]);
        assert_eq!(stdout(&out), "1 1\n", "{algo}");
    }
}

#[test]
fn generated_instances_agree_across_algorithms() {
    let dir = TempDir::new().unwrap();
    gen(
        dir.path(),
        &[
            "--n", "3000", "--m", "3", "--sigma", "3", "--trials", "2", "--seed", "5",
        ],
    );
    for trial in 0..2 {
        let t = dir.path().join(format!("text-{trial}.txt"));
        let p = dir.path().join(format!("pattern-{trial}.txt"));
        let (t, p) = (t.to_str().unwrap(), p.to_str().unwrap());
        let naive = stdout(&oppm(&[
            "match",
            "--algo",
            "naive",
            "--text",
            t,
            "--pattern",
            p,
        ]));
        assert!(!naive.is_empty());
        for algo in ["duel", "kmp"] {
            let got = stdout(&oppm(&[
                "match",
                "--algo",
                algo,
                "--text",
                t,
                "--pattern",
                p,
            ]));
            assert_eq!(got, naive, "{algo}");
        }
    }

    let dir2 = TempDir::new().unwrap();
    gen(
        dir2.path(),
        &[
            "--dim", "2", "--n", "30", "--m", "2", "--sigma", "2", "--seed", "5",
        ],
    );
    let t = dir2.path().join("text-0.txt");
    let p = dir2.path().join("pattern-0.txt");
    let (t, p) = (t.to_str().unwrap(), p.to_str().unwrap());
    let run = |algo: &str| {
        stdout(&oppm(&[
            "match",
            "--dim",
            "2",
            "--algo",
            algo,
            "--text",
            t,
            "--pattern",
            p,
        ]))
    };
    let naive = run("naive");
    assert!(!naive.is_empty());
    assert_eq!(run("duel"), naive);
    assert_eq!(run("reduction2d"), naive);
}

#[test]
fn gen_is_deterministic() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    let args = ["--n", "500", "--m", "7", "--trials", "3", "--seed", "42"];
    gen(a.path(), &args);
    gen(b.path(), &args);
    for trial in 0..3 {
        for kind in ["text", "pattern"] {
            let name = format!("{kind}-{trial}.txt");
            let x = fs::read(a.path().join(&name)).unwrap();
            assert_eq!(x, fs::read(b.path().join(&name)).unwrap(), "{name}");
        }
    }
    let text = fs::read_to_string(a.path().join("text-0.txt")).unwrap();
    assert_eq!(text.split_whitespace().count(), 500);
}

#[test]
fn gen_unit_alphabet() {
    let dir = TempDir::new().unwrap();
    gen(dir.path(), &["--n", "200", "--m", "4", "--sigma", "1"]);
    let text = fs::read_to_string(dir.path().join("text-0.txt")).unwrap();
    assert!(text.split_whitespace().all(|c| c == "1"));
}

#[test]
fn gen_million_is_fast() {
    let dir = TempDir::new().unwrap();
    let start = Instant::now();
    gen(dir.path(), &["--n", "1000000", "--m", "10"]);
    let secs = start.elapsed().as_secs_f64();
    // generous bound: debug builds of the binary are much slower than release
    assert!(secs < 10.0, "{secs} s");
}

#[test]
fn gen_rejects_bad_sizes() {
    let dir = TempDir::new().unwrap();
    let out = oppm(&[
        "gen",
        "--out",
        dir.path().to_str().unwrap(),
        "--n",
        "3",
        "--m",
        "5",
    ]);
    assert!(!out.status.success());
}

#[test]
fn parse_error_names_line() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.txt", "1 2 3\n4 five 6\n");
    let p = write(dir.path(), "p.txt", "1 2\n");
    let out = oppm(&["match", "--text", &t, "--pattern", &p]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn pattern_longer_than_text() {
    let dir = TempDir::new().unwrap();
    let t = write(dir.path(), "t.txt", "1 2\n");
    let p = write(dir.path(), "p.txt", "1 2 3\n");
    let out = oppm(&["match", "--text", &t, "--pattern", &p]);
    assert_eq!(stdout(&out), "");
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn unsupported_combination_fails() {
    let dir = TempDir::new().unwrap();
    let m = write(dir.path(), "m.txt", "1 1\n5\n");
    let out = oppm(&[
        "match",
        "--dim",
        "2",
        "--algo",
        "kmp",
        "--text",
        &m,
        "--pattern",
        &m,
    ]);
    assert!(!out.status.success());
}

#[test]
fn bench_and_summarize() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("bench.csv");
    let csv = csv.to_str().unwrap();
    stdout(&oppm(&[
        "bench",
        "--n",
        "1000,2000",
        "--m",
        "5",
        "--trials",
        "3",
        "--out",
        csv,
    ]));
    let body = fs::read_to_string(csv).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(
        lines[0],
        "algo,dim,n,m,sigma,trial,seed,time_ns,comparisons"
    );
    // duel and kmp, two sizes, three trials
    assert_eq!(lines.len(), 1 + 2 * 2 * 3);

    let summary = stdout(&oppm(&["summarize", "--input", csv]));
    let lines: Vec<&str> = summary.lines().collect();
    assert_eq!(
        lines[0],
        "algo,dim,n,m,sigma,trials,mean_time_ns,mean_comparisons"
    );
    assert_eq!(lines.len(), 1 + 4);
    assert!(lines[1].starts_with("duel,1,1000,5,1000,3,"));
}

#[test]
fn bench_2d_defaults() {
    let out = oppm(&["bench", "--dim", "2", "--n", "20", "--m", "3"]);
    let body = stdout(&out);
    let algos: Vec<&str> = body
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(algos, ["duel", "reduction2d"]);
}

#[test]
fn preset_is_one_dimensional() {
    let out = oppm(&["bench", "--dim", "2", "--preset", "paper-small"]);
    assert!(!out.status.success());
}
