use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_realdim"))
}

struct Scratch(TempDir);

impl Scratch {
    fn new() -> Scratch {
        Scratch(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

fn run_file(path: &Path, extra: &[&str]) -> Output {
    bin().arg("--input").arg(path).args(extra).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

#[test]
fn circle_prints_one() {
    let s = Scratch::new();
    let o = run_file(&s.file("c.poly", "vars: x y\nf1: x^2 + y^2 - 1\n"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn empty_set_prints_minus_one() {
    let s = Scratch::new();
    let o = run_file(
        &s.file("e.poly", "# name: empty\nvars: x y\nf: x^2 + y^2 + 1\n"),
        &[],
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(last_line(&o), "-1");
}

#[test]
fn input_errors_exit_one() {
    let s = Scratch::new();
    for text in [
        "vars: x\nf1: x + z\n",
        "vars: x\nf1: 1/0*x\n",
        "vars: x\n",
        "f: x\nvars: x\n",
    ] {
        let o = run_file(&s.file("b.poly", text), &[]);
        assert_eq!(o.status.code(), Some(1), "{text:?}");
        assert!(o.stdout.is_empty());
        assert!(
            String::from_utf8_lossy(&o.stderr).contains("error"),
            "{text:?}"
        );
    }
    let o = run_file(&s.0.path().join("missing.poly"), &[]);
    assert_eq!(o.status.code(), Some(1));
    let o = bin().args(["--generate", "p:1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = bin()
        .args(["--generate", "p:2", "--mode", "sideways"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = bin().output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn json_report_matches_schema() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/run_report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let s = Scratch::new();
    let umbrella = s.file("u.poly", "vars: x y z\nf: x^2 - y^2*z\n");
    let pair = s.file("c.poly", "vars: x y\nf1: x^2 + y^2 - 1\nf2: x - y\n");
    let runs: [(&PathBuf, &[&str]); 4] = [
        (&umbrella, &["--json"]),
        (&umbrella, &["--json", "--timing"]),
        (&umbrella, &["--json", "--mode", "proper", "--seed", "3"]),
        (&pair, &["--json", "--mode", "las-vegas", "--sos"]),
    ];
    for (file, extra) in runs {
        let o = run_file(file, extra);
        assert_eq!(o.status.code(), Some(0), "{extra:?}");
        let out = stdout(&o);
        assert_eq!(out.lines().count(), 1, "{extra:?}");
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert!(validator.is_valid(&v), "{extra:?}: {out}");
        assert_eq!(v["millis"].is_null(), !extra.contains(&"--timing"));
    }
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&run_file(&umbrella, &["--json"]))).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["mode"], "general");
    let fibers = v["fibers_per_depth"].as_array().unwrap();
    assert!(!fibers.is_empty() && fibers.len() <= 3);
    assert!(fibers.iter().all(|c| c.as_u64().unwrap() >= 1));
}

#[test]
fn schema_rejects_drift() {
    let schema: serde_json::Value =
        serde_json::from_str(include_str!("../schema/run_report.schema.json")).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let good = serde_json::json!({"dim": 1, "fibers_per_depth": [3], "max_eliminant_degree": [2],
        "retries": [0], "seed": 0, "mode": "general", "millis": null});
    assert!(validator.is_valid(&good));
    let mut extra = good.clone();
    extra["elapsed"] = serde_json::json!(3);
    assert!(!validator.is_valid(&extra));
    let mut missing = good.clone();
    missing.as_object_mut().unwrap().remove("retries");
    assert!(!validator.is_valid(&missing));
}

#[test]
fn same_seed_same_bytes() {
    let s = Scratch::new();
    let f = s.file("u.poly", "vars: x y z\nf: x^2 - y^2*z\n");
    let a = run_file(&f, &["--seed", "9", "--json", "--trace"]);
    let b = run_file(&f, &["--seed", "9", "--json", "--trace"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run_file(&f, &["--seed", "9", "--trace"]);
    let b = run_file(&f, &["--seed", "9", "--trace"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn trace_lists_depths_then_dimension() {
    let o = bin()
        .args(["--generate", "p:2", "--trace"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "depth fibers max_degree retries skipped");
    // p_2 vanishes on lines through the origin
    assert_eq!(*lines.last().unwrap(), "1");
    for (k, l) in lines[1..lines.len() - 1].iter().enumerate() {
        let fields: Vec<usize> = l.split(' ').map(|t| t.parse().unwrap()).collect();
        assert_eq!(fields.len(), 5);
        assert_eq!(fields[0], k);
        assert!(fields[1] >= 1);
    }
}

#[test]
fn oracle_subcommand() {
    let s = Scratch::new();
    let cases = [
        ("vars: x y\nf: x^2 + y^2 - 1\n", "1"),
        ("vars: x y\nf: (x^2 - 2)^2 + y^2\n", "0"),
        ("vars: x y\nf: x^2 + y^2 + 1\n", "-1"),
    ];
    for (text, want) in cases {
        let o = bin()
            .args(["oracle2d", "--input"])
            .arg(s.file("o.poly", text))
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(last_line(&o), want, "{text:?}");
    }
    let o = bin()
        .args(["oracle2d", "--input"])
        .arg(s.file("o.poly", "vars: x y z\nf: x\n"))
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}
