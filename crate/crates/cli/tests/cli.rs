use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aacbr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn predict(casebase: &str, queries: &str, engine: &str) -> Output {
    run(&[
        "predict",
        "--casebase",
        &data(casebase),
        "--queries",
        &data(queries),
        "--engine",
        engine,
    ])
}

fn outcomes(o: &Output) -> Vec<String> {
    lines(o)
        .iter()
        .map(|v| v["outcome"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn plain_predictions_on_the_fixture() {
    let o = predict("monotonicity.json", "monotonicity_queries.json", "plain");
    assert!(o.status.success());
    assert_eq!(outcomes(&o), ["+", "-"]);
    let first = &lines(&o)[0];
    assert_eq!(first["id"], "n1");
    assert_eq!(first["engine"], "plain");
    assert_eq!(first["default_in_grounded"], false);

    let o = predict(
        "monotonicity_extended.json",
        "monotonicity_queries.json",
        "plain",
    );
    assert_eq!(outcomes(&o), ["+", "+"]);
}

#[test]
fn cumulative_predictions_ignore_unsurprising_cases() {
    let o = predict(
        "monotonicity_extended.json",
        "monotonicity_queries.json",
        "cumulative",
    );
    assert!(o.status.success());
    assert_eq!(outcomes(&o), ["+", "-"]);
}

#[test]
fn legal_example() {
    assert_eq!(
        outcomes(&predict("legal.json", "legal_queries.json", "plain")),
        ["+"]
    );
    assert_eq!(
        outcomes(&predict(
            "legal_revised.json",
            "legal_queries.json",
            "plain"
        )),
        ["-"]
    );
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = predict(
        "monotonicity_extended.json",
        "monotonicity_queries.json",
        "cumulative",
    );
    let b = predict(
        "monotonicity_extended.json",
        "monotonicity_queries.json",
        "cumulative",
    );
    assert_eq!(a.stdout, b.stdout);
    let args = ["check", "--property", "cm", "--trials", "20", "--seed", "7"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn incoherent_casebase_exit_codes() {
    let o = predict("incoherent.json", "monotonicity_queries.json", "cumulative");
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["concise", "--casebase", &data("incoherent.json")]);
    assert_eq!(o.status.code(), Some(3));

    let o = run(&[
        "predict",
        "--casebase",
        &data("incoherent.json"),
        "--queries",
        &data("monotonicity_queries.json"),
        "--warn-incoherent",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("incoherent"));
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(
        predict("missing.json", "monotonicity_queries.json", "plain")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        predict("monotonicity.json", "monotonicity.json", "plain")
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "--property", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["check", "--property", "cm", "--features", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "check",
            "--property",
            "cm",
            "--features",
            "2",
            "--cases",
            "5"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn checker_reports_the_fixture_counterexample() {
    let o = run(&[
        "check",
        "--property",
        "cautious-monotonicity",
        "--fixture",
        "theorem4",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = lines(&o);
    assert_eq!(out[0]["kind"], "report");
    assert_eq!(out.len(), 2);
    assert_eq!(out[1]["kind"], "counterexample");

    let o = run(&[
        "check",
        "--engine",
        "cumulative",
        "--property",
        "cm",
        "--fixture",
        "theorem4",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn checker_passes_for_the_cumulative_engine() {
    for p in ["cm", "cut", "rm", "completeness", "consistency"] {
        let o = run(&[
            "check",
            "--engine",
            "cumulative",
            "--property",
            p,
            "--trials",
            "30",
            "--features",
            "4",
            "--cases",
            "6",
            "--exhaustive",
        ]);
        assert_eq!(o.status.code(), Some(0), "{p}: {}", stdout(&o));
    }
}

#[test]
fn concise_drops_unsurprising_case_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("concise.json");
    let audit = dir.path().join("audit.jsonl");
    let o = run(&[
        "concise",
        "--casebase",
        &data("monotonicity_extended.json"),
        "--out",
        out.to_str().unwrap(),
        "--audit",
        audit.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let concise: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let ids: Vec<&str> = concise["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["a", "ab", "c", "cz"]);

    let audit: Vec<Value> = std::fs::read_to_string(&audit)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let abc = audit.iter().find(|e| e["id"] == "abc").unwrap();
    assert_eq!(abc["kept"], false);
    assert_eq!(abc["stratum"], 3);
    assert_eq!(abc["predicted"], "+");

    // Already concise: the output reproduces the input.
    let again = dir.path().join("again.json");
    run(&[
        "concise",
        "--casebase",
        out.to_str().unwrap(),
        "--out",
        again.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&again).unwrap());

    // Predictions through the written file match the in-memory model.
    let o = run(&[
        "predict",
        "--casebase",
        out.to_str().unwrap(),
        "--queries",
        &data("monotonicity_queries.json"),
    ]);
    assert_eq!(outcomes(&o), ["+", "-"]);
}

#[test]
fn empty_casebase() {
    let o = run(&["concise", "--casebase", &data("empty.json")]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cases"].as_array().unwrap().len(), 0);
    assert_eq!(
        outcomes(&predict("empty.json", "monotonicity_queries.json", "plain")),
        ["-", "-"]
    );
}

fn dot_counts(text: &str) -> (usize, usize) {
    let nodes = text.lines().filter(|l| l.contains("[label=")).count();
    let edges = text.lines().filter(|l| l.contains("->")).count();
    (nodes, edges)
}

#[test]
fn export_dot_shapes() {
    let o = run(&["export-dot", "--casebase", &data("monotonicity.json")]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("digraph af {"));
    assert_eq!(dot_counts(&text), (5, 4));

    let o = run(&["export-dot", "--casebase", &data("empty.json")]);
    assert_eq!(dot_counts(&stdout(&o)), (1, 0));

    let o = run(&[
        "export-dot",
        "--casebase",
        &data("legal_revised.json"),
        "--query",
        "hm,sd",
    ]);
    let text = stdout(&o);
    assert_eq!(dot_counts(&text), (4, 2));
    assert!(text.contains("hexagon"));
}

#[test]
fn predict_writes_one_dot_file_per_query() {
    let dir = tempfile::tempdir().unwrap();
    let dots = dir.path().join("dots");
    let o = run(&[
        "predict",
        "--casebase",
        &data("monotonicity.json"),
        "--queries",
        &data("monotonicity_queries.json"),
        "--dot",
        dots.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let mut names: Vec<String> = std::fs::read_dir(&dots)
        .unwrap()
        .map(|e| e.unwrap().file_name().to_string_lossy().into_owned())
        .collect();
    names.sort();
    assert_eq!(names, ["n1.dot", "n2.dot"]);
    let n1 = std::fs::read_to_string(dots.join("n1.dot")).unwrap();
    assert_eq!(dot_counts(&n1).0, 6);
}
