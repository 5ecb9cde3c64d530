use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use twistfree::report::{CertificateReport, Payload, WitnessReport};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_twistfree"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, CertificateReport, String) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap();
    all.extend(["--json", p]);
    let out = run(&all);
    let text = std::fs::read_to_string(&path).unwrap();
    let report = CertificateReport::from_json(&text).unwrap();
    (out.status.code().unwrap(), report, text)
}

#[test]
fn classify2_relation_witness() {
    let (code, report, _) = run_json(&["classify2", "--m", "1", "--n1", "1", "--n2", "3", "--question", "free"]);
    assert_eq!(code, 0);
    let v = &report.verdicts[0];
    assert_eq!((v.question.as_str(), v.status.as_str()), ("free", "no"));
    match &v.payload {
        Payload::Witness { witness: WitnessReport::Relation { lhs, rhs, lhs_value, rhs_value, .. } } => {
            // Generators stand for the twist powers, so `b` is D_b^3 here.
            assert_eq!(lhs.text, "a b a b a b a");
            assert_eq!(rhs.text, "a^2 b a b a b");
            assert_eq!(lhs_value, rhs_value);
        }
        other => panic!("unexpected payload {other:?}"),
    }
    assert_eq!(v.to_verdict().unwrap().check_witness().unwrap(), Some(true));
}

#[test]
fn not_applicable_exits_2() {
    let out = run(&["classify2", "--m", "0", "--n1", "1", "--n2", "1", "--question", "relpa"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not-applicable"));

    let (code, report, _) = run_json(&["classify2", "--m", "0", "--n1", "1", "--n2", "1", "--question", "relpa"]);
    assert_eq!(code, 2);
    assert_eq!(report.error.unwrap().kind, "not-applicable");
    assert!(report.verdicts.is_empty());
}

#[test]
fn invalid_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"h\": 2,\n \"intersection\": [[0, 1], [2, 0]]}").unwrap();
    let out = run(&["bounds", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("intersection"));

    std::fs::write(&bad, "{\"h\": 2,\n \"intersection\": [[0, 1], [1, 0]],\n \"torus_slope\": []}").unwrap();
    let out = run(&["bounds", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let out = run(&["torus-triple", "--exponents", "3,0,3", "--question", "free"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["torus-triple", "--exponents", "3,3", "--question", "free"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify2", "--m", "1", "--n1", "1", "--question", "free"]);
    assert_eq!(out.status.code(), Some(2));
    let triangle = corpus("torus-triangle.json");
    let t = triangle.to_str().unwrap();
    let out = run(&["verify", "--input", t, "--exponents", "3,3,3", "--mode", "ppl", "--height", "100000"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["search", "--input", t, "--exponents", "1,1,1", "--mode", "reducibles", "--max-syllables", "40"]);
    assert_eq!(out.status.code(), Some(2));
    let out =
        run(&["verify", "--input", t, "--exponents", "3,3,3", "--mode", "ppl", "--height", "10", "--mu", "1,2=-3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn abstract_systems_get_theorems_only() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("abstract.json");
    std::fs::write(&f, r#"{"h": 3, "intersection": [[0, 4, 4], [4, 0, 4], [4, 4, 0]], "pairwise_filling": true}"#)
        .unwrap();
    let p = f.to_str().unwrap();
    let (code, report, _) = run_json(&["bounds", "--input", p, "--lambda", "auto"]);
    assert_eq!(code, 0);
    let statuses: Vec<&str> = report.verdicts.iter().map(|v| v.status.as_str()).collect();
    assert_eq!(statuses, ["unknown", "yes", "yes", "yes"]);
    // Without ratio bounds the per-generator calculator has nothing to work with.
    let (code, report, _) = run_json(&["bounds", "--input", p]);
    assert_eq!(code, 0);
    assert_eq!(report.bounds.unwrap().results[3].status, "not-applicable");
    assert!(report.verdicts.iter().all(|v| v.consistency.as_ref().unwrap().status == "unchecked"));
    let out = run(&["verify", "--input", p, "--exponents", "3,3,3", "--mode", "ppl", "--height", "10"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn torus_triple_open_case_reports_oracle_word() {
    let (code, report, _) = run_json(&["torus-triple", "--exponents", "3,3,3", "--question", "relpa"]);
    assert_eq!(code, 0);
    assert_eq!(report.verdicts[0].status, "unknown");
    let search = report.search.unwrap();
    assert_eq!(search.found[0].word.text, "a c b");
    assert_eq!(search.found[0].value.trace, 2);

    let (_, report, _) = run_json(&["torus-triple", "--exponents", "2,4,4", "--question", "relpa"]);
    assert_eq!(report.verdicts[0].status, "no");
    assert_eq!(report.verdicts[0].consistency.as_ref().unwrap().status, "consistent");
}

#[test]
fn bounds_on_the_spread_triple() {
    let spread = corpus("spread-triple.json");
    let (code, report, _) = run_json(&["bounds", "--input", spread.to_str().unwrap(), "--lambda", "auto"]);
    assert_eq!(code, 0);
    let b = report.bounds.unwrap();
    let stats = b.stats.unwrap();
    assert_eq!((stats.min, stats.max), (3, 8));
    let ns: Vec<Vec<u64>> = b.results.iter().map(|r| r.exponents.iter().map(|e| e.n).collect()).collect();
    assert_eq!(ns, vec![vec![], vec![3], vec![16], vec![6, 14, 15]]);
    assert_eq!(b.results[0].status, "hypotheses-fail");

    for (flag, theorem) in
        [("32", "spread-ratio"), ("33", "uniform-free"), ("36", "uniform-relpa"), ("lemma31", "pingpong")]
    {
        let (code, report, _) =
            run_json(&["bounds", "--input", spread.to_str().unwrap(), "--lambda", "auto", "--theorem", flag]);
        assert_eq!(code, 0);
        assert_eq!(report.bounds.unwrap().results[0].theorem, theorem);
    }
    let pair = corpus("pair-m2.json");
    let out = run(&["bounds", "--input", pair.to_str().unwrap(), "--theorem", "33"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_modes() {
    let triangle = corpus("torus-triangle.json");
    let t = triangle.to_str().unwrap();
    let (code, report, _) =
        run_json(&["verify", "--input", t, "--exponents", "3,3,3", "--mode", "ppl", "--height", "40"]);
    assert_eq!(code, 0);
    assert_eq!(report.verdicts.len(), 1);
    assert_eq!(report.verdicts[0].status, "yes");
    let (_, report, _) = run_json(&[
        "verify",
        "--input",
        t,
        "--exponents",
        "3,3,4",
        "--mode",
        "wpp",
        "--height",
        "20",
        "--n0",
        "3",
        "--power-bound",
        "3",
    ]);
    assert_eq!(report.verdicts.len(), 2);
    assert!(report.verdicts.iter().all(|v| v.status == "yes"));
    let (_, report, _) =
        run_json(&["verify", "--input", t, "--exponents", "3,3,3", "--mode", "wpp", "--height", "15", "--n0", "2"]);
    assert_eq!(report.verdicts[0].status, "unknown");
    match &report.verdicts[0].payload {
        Payload::BoundedVerification { violations, n0, .. } => {
            assert!(!violations.is_empty());
            assert_eq!(*n0, Some(2));
        }
        other => panic!("unexpected payload {other:?}"),
    }
}

#[test]
fn search_modes() {
    let pair = corpus("pair-m1.json");
    let p = pair.to_str().unwrap();
    let (code, report, _) = run_json(&[
        "search",
        "--input",
        p,
        "--exponents",
        "1,1",
        "--mode",
        "relations",
        "--max-syllables",
        "6",
        "--max-step",
        "1",
    ]);
    assert_eq!(code, 0);
    assert!(!report.search.as_ref().unwrap().found.is_empty());
    assert_eq!(report.verdicts[0].status, "no");
    assert_eq!(report.verdicts[0].to_verdict().unwrap().check_witness().unwrap(), Some(true));

    let (_, report, _) = run_json(&[
        "search",
        "--input",
        p,
        "--exponents",
        "1,4",
        "--mode",
        "reducibles",
        "--max-syllables",
        "2",
        "--max-step",
        "1",
    ]);
    let found = &report.search.as_ref().unwrap().found;
    assert!(found.iter().any(|f| f.value.trace == -2));
    assert_eq!(report.verdicts[0].question, "relpa");

    let spread = corpus("spread-triple.json");
    let (code, report, _) =
        run_json(&["search", "--input", spread.to_str().unwrap(), "--exponents", "3,3,3", "--mode", "relations"]);
    assert_eq!(code, 0);
    assert!(report.verdicts.is_empty());
    assert!(report.search.unwrap().found.is_empty());
}

#[test]
fn reports_are_byte_deterministic() {
    let spread = corpus("spread-triple.json");
    let args = ["bounds", "--input", spread.to_str().unwrap(), "--lambda", "auto"];
    let (_, a, text_a) = run_json(&args);
    let (_, _, text_b) = run_json(&args);
    assert_eq!(text_a, text_b);
    assert_eq!(a.to_json(), text_a);

    let out = run(&["torus-triple", "--exponents", "2,3,6", "--question", "relpa", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let report = CertificateReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(report.verdicts[0].status, "no");
}

#[test]
fn every_corpus_file_loads() {
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")).unwrap() {
        let path = entry.unwrap().path();
        let file = twistfree::CurveSystemFile::read(&path).unwrap();
        let system = file.to_system().unwrap();
        assert!(system.torus_slopes().is_some(), "{}", path.display());
    }
}
