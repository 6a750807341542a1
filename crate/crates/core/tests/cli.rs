use std::path::PathBuf;
use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roman-census")).args(args).output().expect("binary runs")
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("roman-census-it-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn stdout_carries_only_results() {
    let o = bin(&["enumerate", "--gen", "path", "--n", "4", "--class", "forest", "--format", "count"]);
    assert!(o.status.success());
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "7");
    assert_eq!(String::from_utf8_lossy(&o.stderr).trim(), "# count=7 class=forest");
}

#[test]
fn count_format_agrees_with_lines() {
    for gen in [["--gen", "chordal", "--n", "11"], ["--gen", "interval", "--n", "12"], ["--gen", "gnp", "--n", "9"]] {
        let mut args = vec!["enumerate", "--seed", "7"];
        args.extend(gen);
        let lines = bin(&args);
        args.extend(["--format", "count"]);
        let count = bin(&args);
        let n: usize = String::from_utf8_lossy(&count.stdout).trim().parse().unwrap();
        assert_eq!(String::from_utf8_lossy(&lines.stdout).lines().count(), n);
    }
}

#[test]
fn exit_codes_are_stable() {
    let c4 = scratch("c4.edges", "4 4\n0 1\n1 2\n2 3\n0 3\n");
    let c4 = c4.to_str().unwrap();
    assert_eq!(bin(&["enumerate", "--input", c4, "--class", "forest"]).status.code(), Some(3));
    assert_eq!(bin(&["enumerate", "--input", "/no/such/file"]).status.code(), Some(2));
    let garbled = scratch("garbled.edges", "3 2\n0 1\n");
    assert_eq!(bin(&["enumerate", "--input", garbled.to_str().unwrap()]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_roman-census"))
        .args(["enumerate", "--gen", "path", "--n", "12", "--class", "oracle"])
        .env("ROMAN_CENSUS_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(4));
    assert_eq!(bin(&["verify", "--gen", "tree", "--n", "10", "--class", "forest"]).status.code(), Some(0));
    assert_eq!(
        bin(&["verify", "--gen", "chordal", "--n", "10", "--samples", "4", "--jobs", "2"]).status.code(),
        Some(0)
    );
}

#[test]
fn interval_file_input() {
    let rep = scratch("p4.intervals", "4\n0 1\n1 2\n2 3\n3 4\n");
    let o = bin(&["enumerate", "--intervals", rep.to_str().unwrap(), "--class", "interval", "--format", "count"]);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "7");
    let wrong = scratch("p3.edges", "4 2\n0 1\n1 2\n");
    let o = bin(&["enumerate", "--input", wrong.to_str().unwrap(), "--intervals", rep.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn analyze_custom_vectors() {
    let dsl = scratch("custom.dsl", "# two rules\nflat: (1, 1)\nlopsided: (1, 1+w2) = 1.7314\n");
    let o = bin(&["analyze", "--vectors", dsl.to_str().unwrap(), "--w2", "0.57"]);
    assert!(o.status.success());
    let text = String::from_utf8_lossy(&o.stdout);
    assert!(text.contains("flat") && text.contains("2.0000") && text.contains("1.7314"), "{text}");
    let o = bin(&["analyze", "--ruleset", "chordal", "--optimize", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["w1"].as_f64().unwrap() - 0.710134).abs() < 0.01);
    assert!((v["w2"].as_f64().unwrap() - 0.434799).abs() < 0.01);
}

#[test]
fn bench_paths_follow_the_recurrence() {
    let o = bin(&["bench", "--gen", "path", "--from", "2", "--to", "20", "--jobs", "2"]);
    let text = String::from_utf8_lossy(&o.stdout);
    for line in text.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let n: usize = cols[1].parse().unwrap();
        assert_eq!(cols[2], roman_census::paths::count_path(n).to_string());
    }
}
