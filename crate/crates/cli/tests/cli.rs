use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn chordgen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chordgen"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn files_in(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read(&p).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn run_into(dir: &Path, extra: &[&str]) -> Output {
    let graph = dir.join("g.txt");
    let stats = dir.join("stats.csv");
    let hist = dir.join("hist.json");
    let mut args = vec![
        "--n",
        "150",
        "--runs",
        "3",
        "--seed",
        "42",
        "--graph-out",
        graph.to_str().unwrap(),
        "--stats-out",
        stats.to_str().unwrap(),
        "--hist-out",
        hist.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    chordgen(&args)
}

#[test]
fn same_seed_gives_identical_files() {
    for method in [
        &["--method", "growing", "--k", "12", "--connect"][..],
        &["--method", "connecting", "--lambda", "1.5"][..],
        &["--method", "pruned", "--f", "0.5", "--s", "0.7", "--graph-format", "dimacs"][..],
        &["--method", "alg1", "--ubc", "0.02"][..],
    ] {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        assert!(run_into(a.path(), method).status.success(), "{method:?}");
        assert!(run_into(b.path(), method).status.success(), "{method:?}");
        let fa = files_in(a.path());
        assert_eq!(fa.len(), 6, "{fa:?}");
        assert_eq!(fa, files_in(b.path()), "{method:?}");
    }
}

#[test]
fn stats_csv_has_table_columns() {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("s.csv");
    let out = chordgen(&[
        "--n", "40", "--method", "pruned", "--f", "0", "--s", "0.5", "--runs", "1",
        "--stats-out", stats.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&stats).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,f,s,density,m,components,clique_count,clique_min,clique_max,clique_mean,clique_sd"
    );
    assert_eq!(lines.next().unwrap(), "40,0,0.5,1.000,780.0,1.0,1.0,40.0,40.0,40.0,0.0");
    assert!(dir.path().join("s.raw.csv").exists());
}

#[test]
fn graph_file_round_trips_through_the_oracle_check() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("small.txt");
    let out = chordgen(&[
        "--n", "12", "--method", "connecting", "--lambda", "2", "--runs", "1",
        "--graph-out", graph.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let check = chordgen(&["oracle", "--check", graph.to_str().unwrap()]);
    assert!(check.status.success(), "{}", String::from_utf8_lossy(&check.stderr));
    assert!(String::from_utf8_lossy(&check.stdout).contains("chordal fast=true brute_force=true"));
}

#[test]
fn lower_bound_subcommand() {
    let out = chordgen(&["oracle", "--lower-bound", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("m=32") && text.contains("components=5"), "{text}");
}

#[test]
fn bad_configurations_exit_nonzero() {
    let cases: &[&[&str]] = &[
        &[],
        &["--n", "10"],
        &["--n", "10", "--method", "growing"],
        &["--n", "10", "--method", "growing", "--k", "11"],
        &["--n", "10", "--method", "growing", "--k", "3", "--lambda", "1"],
        &["--n", "10", "--method", "connecting", "--lambda", "0"],
        &["--n", "10", "--method", "pruned", "--f", "1.0", "--s", "0.5"],
        &["--n", "10", "--method", "alg1", "--ubc", "2"],
        &["--n", "10", "--method", "alg1", "--ubc", "0.1", "--connect"],
        &["--n", "10", "--method", "growing", "--k", "3", "--runs", "0"],
        &["--n", "10", "--method", "bogus"],
        &["oracle"],
    ];
    for args in cases {
        let out = chordgen(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn unwritable_output_is_an_io_failure() {
    let out = chordgen(&[
        "--n", "10", "--method", "growing", "--k", "3", "--runs", "1",
        "--graph-out", "/nonexistent-dir/g.txt",
    ]);
    assert_eq!(out.status.code(), Some(1));
}
