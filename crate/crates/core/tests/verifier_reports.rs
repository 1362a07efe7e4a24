use bethe_lab_core::verifier::{self, PolynomialitySetup};
use bethe_lab_core::cm::TraceWord;
use bethe_lab_core::exact::ring::rat;
use bethe_lab_core::GaudinConfig;

#[test]
fn main_theorem_small_configs() {
    for (gl_n, sites) in [(1, 3), (2, 2), (3, 2)] {
        let cfg = GaudinConfig::seeded(gl_n, sites, 5).unwrap();
        let r = verifier::verify_main_theorem(&cfg, 4, 4).unwrap();
        assert!(r.passed, "{r:?}");
        assert!(r.first_residual.is_none());
    }
}

#[test]
fn reports_echo_the_configuration() {
    let cfg = GaudinConfig::new(2, 2, vec![rat(0), rat(1)], vec![rat(0), rat(1)]).unwrap();
    let r = verifier::verify_constant_terms(&cfg).unwrap();
    assert_eq!(r.check, "constant_terms");
    assert_eq!(r.config.gl_n, Some(2));
    assert_eq!(r.config.k.as_deref(), Some(&[rat(0), rat(1)][..]));
}

#[test]
fn failing_polynomiality_reports_first_residual() {
    let mut s = PolynomialitySetup::new(2, 2, vec![rat(0), rat(1)], TraceWord::parse("Y^3").unwrap(), 9);
    s.degree = 2;
    let r = verifier::verify_polynomiality(&s).unwrap();
    assert!(!r.passed);
    let res = r.first_residual.expect("a residual is reported");
    assert!(res.location.starts_with("holdout point"));
    assert!(res.value.is_some_and(|v| v != rat(0)));
}

#[test]
fn rejects_coincident_points() {
    assert!(GaudinConfig::new(2, 2, vec![rat(0), rat(1)], vec![rat(3), rat(3)]).is_err());
}
