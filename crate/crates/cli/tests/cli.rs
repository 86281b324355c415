use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use viswidth::corpus::{corpus, DEFAULT_SEED};
use viswidth::io::{parse_polygon, polygon_to_json};

fn viswidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_viswidth")).args(args).env_remove("VISWIDTH_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn shipped_corpus() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

const SQUARE: &str = r#"{"vertices": [[0, 0], [4, 0], [4, 4], [0, 4]]}"#;
const L_SHAPE: &str = r#"{"vertices": [[0, 0], [2, 0], [2, 1], [1, 1], [1, 2], [0, 2]]}"#;

#[test]
fn comb_widths_from_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let comb = dir.path().join("comb2.json");
    let comb = comb.to_str().unwrap();
    let o = viswidth(&["gen", "comb", "--layers", "2", "-o", comb]);
    assert!(o.status.success(), "{}", stderr(&o));

    let o = viswidth(&["pvw", comb]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("4"));

    let o = viswidth(&["cvw", comb, "--mode", "certified"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "6");
    assert_eq!(lines[1], "witness chord (0, 0)-(0, 11)");

    let o = viswidth(&["cvw", comb, "--mode", "sampled", "--samples", "200", "--seed", "3", "--json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(value["cvw"].as_u64().unwrap() <= 6);
    assert_eq!(value["method"], "SampledLowerBound");

    let o = viswidth(&["reflex", comb]);
    assert_eq!(stdout(&o).lines().next(), Some("6"));
}

#[test]
fn convex_input() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let o = viswidth(&["pvw", &sq]);
    assert_eq!(stdout(&o).lines().next(), Some("0"));
    let o = viswidth(&["reflex", &sq]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.json", "{\"vertices\": [[0, 0]");
    let bowtie = write(dir.path(), "bowtie.json", r#"{"vertices": [[0, 0], [2, 2], [2, 0], [0, 2]]}"#);
    let l = write(dir.path(), "l.json", L_SHAPE);
    let missing = dir.path().join("missing.json");

    let cases = [
        (vec!["pvw", broken.as_str()], "malformed JSON"),
        (vec!["pvw", bowtie.as_str()], "intersect"),
        (vec!["pvw", missing.to_str().unwrap()], "missing.json"),
        (vec!["visgraph", l.as_str(), "--chord", "0,0:5"], "invalid chord"),
        (vec!["visgraph", l.as_str(), "--chord", "2,0:1,2"], "invalid chord"),
        (vec!["gen", "random", "--vertices", "2", "-o", "x.json"], "vertices"),
        (vec!["frobnicate"], "frobnicate"),
    ];
    let mut messages = Vec::new();
    for (args, needle) in cases {
        let o = viswidth(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        let msg = stderr(&o);
        assert!(msg.contains(needle), "{args:?}: {msg}");
        messages.push(msg);
    }
    messages.sort();
    messages.dedup();
    assert_eq!(messages.len(), 7);
}

#[test]
fn visgraph_reports_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let l = write(dir.path(), "l.json", L_SHAPE);
    let out = dir.path().join("g.json");
    let o = viswidth(&["visgraph", &l, "--chord", "0,0:0,2", "-o", out.to_str().unwrap(), "--check", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let g: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(g["edges"], serde_json::json!([[2, 0], [2, 1]]));
    assert_eq!(g["layers"], serde_json::json!([[0, 1], [2]]));

    // With k = 0 the reflex corner has too many in-neighbours to fit.
    let o = viswidth(&["visgraph", &l, "--chord", "0,0:0,2", "--check", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn rendering() {
    let dir = tempfile::tempdir().unwrap();
    let sq = write(dir.path(), "square.json", SQUARE);
    let l = write(dir.path(), "l.json", L_SHAPE);
    let svg = dir.path().join("out.svg");
    let svg_path = svg.to_str().unwrap();

    let o = viswidth(&["render", &sq, "-o", svg_path]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<path").count(), 1);
    let d = text.split(" d=\"").nth(1).unwrap().split('"').next().unwrap();
    assert_eq!(d.matches(['M', 'L']).count(), 4);

    let o = viswidth(&["render", &l, "-o", svg_path, "--vis-point", "19/10,1/10"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&svg).unwrap();
    assert!(text.contains("id=\"region-"));
    assert_eq!(text.matches("id=\"window-").count(), 1);

    let comb = dir.path().join("comb2.json");
    viswidth(&["gen", "comb", "--layers", "2", "-o", comb.to_str().unwrap()]);
    let o = viswidth(&["render", comb.to_str().unwrap(), "-o", svg_path, "--graph", "0,0:0,11"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("id=\"node-").count(), 8);
    assert_eq!(text.matches("id=\"edge-").count(), 12);

    let o = viswidth(&["render", &sq, "-o", svg_path, "--vis-point", "9,9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn shipped_corpus_matches_the_generator() {
    let dir = shipped_corpus();
    let members = corpus(DEFAULT_SEED).unwrap();
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    assert_eq!(names.len(), members.len());
    for (name, poly) in members {
        let text = fs::read_to_string(dir.join(format!("{name}.json"))).unwrap();
        assert_eq!(text, polygon_to_json(&poly), "{name}");
        assert_eq!(parse_polygon(&text).unwrap(), poly);
    }
}

#[test]
fn shipped_corpus_verifies() {
    let mut args = vec!["verify".to_string()];
    let mut files: Vec<PathBuf> = fs::read_dir(shipped_corpus()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    args.extend(files.iter().map(|f| f.to_str().unwrap().to_string()));
    for flag in ["--suite", "all", "--points", "40", "--chords", "40", "--graph-chords", "3", "--viewpoints", "2"] {
        args.push(flag.to_string());
    }
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let o = viswidth(&args);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}{}", stderr(&o));
    assert!(text.ends_with("0 failed\n"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn seeded_generation_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = viswidth(&["--seed", "5", "gen", "random", "--vertices", "12", "-o", p.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stderr(&o));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    assert_eq!(parse_polygon(&text).unwrap().len(), 12);
}
