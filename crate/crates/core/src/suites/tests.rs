use super::*;
use crate::exactnum::qi;

fn failures(report: &SuiteReport) -> Vec<String> {
    report.failures().map(|c| format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())).collect()
}

#[test]
fn liecore_passes_by_default() {
    let report = run_suite("liecore", &Config::default()).unwrap();
    assert!(report.passed(), "{:?}", failures(&report));
    assert!(report.check("liecore/a1/jacobi").is_some());
    assert!(report.check("liecore/a2/killing_trace_form").is_some());
}

#[test]
fn every_suite_passes_on_a1() {
    let config = Config { algebra: Some("a1".into()), ..Config::default() };
    for suite in ["slodowy", "poisson", "wonderful", "slices"] {
        let report = run_suite(suite, &config).unwrap();
        assert!(report.passed(), "{suite}: {:?}", failures(&report));
        assert!(!report.checks.is_empty());
    }
}

#[test]
fn reports_are_sorted_and_echo_the_config() {
    let config = Config { algebra: Some("a1".into()), seed: 3, samples: 5, partition: None };
    let report = run_suite("slodowy", &config).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert_eq!(report.config_echo, ConfigEcho { seed: 3, samples: 5, algebra: vec!["a1".into()], partition: None });
    let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
    assert_eq!(json["schema"], 1);
    assert_eq!(json["status"], "pass");
    assert!(json["checks"][0].get("witness").is_none());
}

#[test]
fn reports_are_deterministic() {
    let config = Config { algebra: Some("a1".into()), ..Config::default() };
    let a = run_suite("poisson", &config).unwrap().to_json();
    let b = run_suite("poisson", &config).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn corrupted_bracket_fails_jacobi_with_a_triple() {
    let alg = LieAlgebra::sl(2).unwrap().with_corrupted_structure_constant(0, 2, 1, qi(1));
    let report = run_suite_on("liecore", &Config::default(), &[alg]).unwrap();
    assert!(!report.passed());
    let jacobi = report.check("liecore/a1/jacobi").unwrap();
    assert_eq!(jacobi.status, Status::Fail);
    assert!(jacobi.witness.as_ref().unwrap().starts_with("basis triple ("));
}

#[test]
fn config_validation() {
    assert!(matches!(run_suite("nope", &Config::default()), Err(Error::UnknownSuite(_))));
    let zero = Config { samples: 0, ..Config::default() };
    assert!(matches!(run_suite("liecore", &zero), Err(Error::InvalidConfig(_))));
    let bad_alg = Config { algebra: Some("b2".into()), ..Config::default() };
    assert!(matches!(run_suite("liecore", &bad_alg), Err(Error::UnknownAlgebra(_))));
    let bad_partition = Config { algebra: Some("a1".into()), partition: Some(vec![2, 1]), ..Config::default() };
    assert!(run_suite("slodowy", &bad_partition).is_err());
    let partition_only = Config { partition: Some(vec![2, 1]), ..Config::default() };
    assert_eq!(partition_only.algebras().unwrap().len(), 1);
    assert_eq!(Config::default().count(50), 50);
    assert_eq!(Config { samples: 5, ..Config::default() }.count(50), 13);
}
