use std::path::PathBuf;
use std::process::{Command, Output};

use ehrhart_cli::report::{AnalysisReport, Exact, Status, TensorReport};
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge-ehrhart"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: {}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    });
    (out.status.code().unwrap(), value)
}

fn analysis(file: &str) -> (i32, AnalysisReport) {
    let (code, v) = json(&["analyze", &data(file)]);
    (code, serde_json::from_value(v).unwrap())
}

fn exact(num: i64, den: i64) -> Exact {
    Exact {
        num: num.to_string(),
        den: den.to_string(),
    }
}

fn check<'a>(r: &'a AnalysisReport, name: &str) -> &'a ehrhart_cli::report::Check {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check {name}"))
}

#[test]
fn cross_polygon_report() {
    let (code, r) = analysis("cross2.json");
    assert_eq!(code, 0);
    assert_eq!(r.schema, 1);
    let p = r.polytope.as_ref().unwrap();
    assert_eq!(p.delta, vec![1, 2, 1]);
    assert!(p.reflexive && p.simplicial);
    assert_eq!(p.facets.len(), 4);
    assert_eq!(r.classification.kind, "reflexive");
    assert_eq!(r.classification.root_line, "CL");
    assert!(
        r.checks.iter().all(|c| c.status == Status::Pass),
        "{:?}",
        r.checks
    );
}

#[test]
fn mixed_spectrum_report() {
    let (code, r) = analysis("example3x.spectrum.json");
    assert_eq!(code, 0);
    assert!(r.polytope.is_none());
    assert_eq!(r.hodge_ehrhart, vec![exact(0, 1), exact(3, 2), exact(5, 2)]);
    assert_eq!(r.theta_classes.len(), 2);
    assert_eq!(r.theta_classes[0].theta, vec![0, 3, 0]);
    assert_eq!(r.theta_classes[1].alpha, exact(1, 2));
    assert_eq!(
        r.theta_classes[1].polynomial,
        vec![exact(0, 1), exact(0, 1), exact(1, 1)]
    );
    assert_eq!(r.classification.kind, "mixed");
}

#[test]
fn simplex_is_off_the_circle() {
    let (code, r) = analysis("simplex123.json");
    assert_eq!(code, 0);
    assert!(!r.root_factorization.applicable);
    assert_eq!(
        check(&r, "root_factorization").status,
        Status::NotApplicable
    );
    let deviation: f64 = r
        .root_factorization
        .circle_deviation
        .as_ref()
        .unwrap()
        .parse()
        .unwrap();
    assert!(deviation > 0.1);
}

#[test]
fn inner_ones_factor() {
    let (code, r) = analysis("inner4.spectrum.json");
    assert_eq!(code, 0);
    let f = &r.root_factorization;
    assert!(f.applicable);
    assert_eq!((f.k, f.r), (Some(1), Some(2)));
    assert_eq!(f.linear_roots, vec![0, -1]);
    assert_eq!(f.predicted_line, Some(exact(-1, 2)));
}

#[test]
fn hodge_diamond_shadow() {
    let (code, r) = analysis("hodge-diamond.spectrum.json");
    assert_eq!(code, 0);
    assert_eq!(r.mu, 9);
    assert!(r.spectrum.iter().all(|a| a.exponent.den == "1"));
    assert_eq!(r.theta.iter().sum::<u64>(), 9);
    assert_eq!(r.classification.kind, "reflexive");
}

#[test]
fn report_round_trips_exactly() {
    let out = run(&["--format", "json", "analyze", &data("seg12.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    let report: AnalysisReport = serde_json::from_str(&text).unwrap();
    let again = serde_json::to_string_pretty(&report).unwrap();
    assert_eq!(again.trim_end(), text.trim_end());
    let lp = &report.polytope.as_ref().unwrap().ehrhart_polynomial;
    let back: Vec<_> = lp.iter().map(|e| e.to_rational().unwrap()).collect();
    assert_eq!(
        back,
        vec![ehrhart_core::series::int(1), ehrhart_core::series::int(3)]
    );
}

fn without_timing(mut v: Value) -> Value {
    fn strip(v: &mut Value) {
        match v {
            Value::Object(map) => {
                map.remove("timing");
                map.values_mut().for_each(strip);
            }
            Value::Array(items) => items.iter_mut().for_each(strip),
            _ => {}
        }
    }
    strip(&mut v);
    v
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["analyze".to_string(), data("simplex123.json")],
        vec!["tensor".to_string(), data("cross2.json"), data("seg.json")],
        ["fuzz", "--seed", "5", "--count", "6"]
            .map(String::from)
            .to_vec(),
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let (_, a) = json(&args);
        let (_, b) = json(&args);
        assert_eq!(
            serde_json::to_string(&without_timing(a)).unwrap(),
            serde_json::to_string(&without_timing(b)).unwrap()
        );
    }
}

#[test]
fn tensor_of_segments() {
    let (code, v) = json(&["tensor", &data("seg.json"), &data("seg.json")]);
    assert_eq!(code, 0);
    let r: TensorReport = serde_json::from_value(v).unwrap();
    assert_eq!(r.theta, vec![1, 2, 1]);
    assert!(!r.forced);
    let names: Vec<_> = r.checks.iter().map(|c| c.name.as_str()).collect();
    assert!(names.contains(&"free_sum_ehrhart") && names.contains(&"ehrhart_series_product"));
    assert_eq!(r.analysis.unwrap().classification.kind, "reflexive");
}

#[test]
fn tensor_guard() {
    let out = run(&[
        "tensor",
        &data("cusp.spectrum.json"),
        &data("node.spectrum.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(
        err.contains("reflexive") && err.contains("z + z^2"),
        "{err}"
    );

    let (code, v) = json(&[
        "tensor",
        "--force",
        &data("cusp.spectrum.json"),
        &data("node.spectrum.json"),
    ]);
    assert_eq!(code, 0);
    let r: TensorReport = serde_json::from_value(v).unwrap();
    assert!(r.forced && r.analysis.is_none());
    let exps: Vec<_> = r
        .spectrum
        .iter()
        .map(|a| (a.exponent.clone(), a.multiplicity))
        .collect();
    assert_eq!(exps, vec![(exact(5, 6), 1), (exact(7, 6), 1)]);
    assert_eq!(r.theta, vec![0, 1, 1]);
}

#[test]
fn freesum_writes_a_polytope() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("sum.json");
    let out = run(&[
        "freesum",
        &data("cross2.json"),
        &data("seg.json"),
        "-o",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let (code, v) = json(&["analyze", target.to_str().unwrap()]);
    assert_eq!(code, 0);
    let r: AnalysisReport = serde_json::from_value(v).unwrap();
    assert_eq!(r.polytope.unwrap().delta, vec![1, 3, 3, 1]);
}

#[test]
fn fuzz_summaries() {
    let (code, v) = json(&["fuzz", "--count", "0"]);
    assert_eq!(code, 0);
    assert_eq!(
        (v["passed"].as_u64(), v["failed"].as_u64()),
        (Some(0), Some(0))
    );
    let (code, v) = json(&["fuzz", "--seed", "2", "--count", "10", "--dim-max", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], 10);
}

#[test]
fn failing_checks_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("lopsided.json");
    std::fs::write(&file, r#"{"dim": 2, "atoms": [[0, 1, 1], [1, 2, 2]]}"#).unwrap();
    let (code, v) = json(&["analyze", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    let r: AnalysisReport = serde_json::from_value(v).unwrap();
    assert_eq!(check(&r, "spectrum_symmetry").status, Status::Fail);
}

#[test]
fn input_errors_exit_two_with_positions() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    std::fs::write(&file, "{\"dim\": 2,\n \"vertices\": [[1, 0],, [0, 1]]}").unwrap();
    let out = run(&["analyze", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("broken.json:2:"), "{err}");

    let out = run(&["--kind", "polytope", "analyze", &data("node.spectrum.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["analyze", &data("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn text_output_mentions_the_essentials() {
    let out = run(&["analyze", &data("cross2.json")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("delta      (1, 2, 1)"), "{text}");
    assert!(text.contains("reflexive, roots on CL"), "{text}");
    assert!(text.contains("result     pass"), "{text}");
}

#[test]
fn random_reports_round_trip() {
    use ehrhart_cli::analyze::{analyze_polytope, Options};
    use ehrhart_cli::report::InputDescriptor;
    for (i, p) in ehrhart_cli::fuzz::generate(11, 20, 3).iter().enumerate() {
        let desc = InputDescriptor {
            path: None,
            kind: String::from("polytope"),
        };
        let report = analyze_polytope(p, desc, &Options::default()).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report, "polytope {i}");
        for c in &back.hodge_ehrhart {
            assert_eq!(Exact::from(&c.to_rational().unwrap()), *c);
        }
    }
}
