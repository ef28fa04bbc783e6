use std::f64::consts::FRAC_PI_2;

use reference_oracle::{
    b1_eta, oracle_contour, oracle_cross_check, oracle_direct, oracle_u_negative, trace_path,
    write_paths_csv, Branch, OracleConfig, OracleMethod, Regime, Which,
};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

#[test]
fn direct_k0_is_exponential() {
    let r = oracle_direct(5.0, 0.0, Which::Bateman, &cfg()).unwrap();
    assert_eq!(r.method, OracleMethod::Direct);
    assert!(rel(r.value, (-5f64).exp()) < 1e-10, "{}", r.value);
    assert!(r.abs_err_estimate <= 1e-12);
}

#[test]
fn direct_havelock_vanishes_at_origin() {
    let r = oracle_direct(1e-6, 0.0, Which::Havelock, &cfg()).unwrap();
    // h₀(x) ~ (2/π)x ln(1/x) as x → 0
    assert!(r.value.abs() < 1e-4, "{}", r.value);
    let r0 = oracle_direct(0.0, 0.0, Which::Havelock, &cfg()).unwrap();
    assert_eq!(r0.value, 0.0);
}

#[test]
fn direct_even_order_negative_argument_vanishes() {
    let r = oracle_direct(-5.0, 2.0, Which::Bateman, &cfg()).unwrap();
    assert!(r.value.abs() < 1e-12, "{}", r.value);
}

#[test]
fn contour_reproduces_table_cells() {
    // Havelock a = 2, x = 20
    let r = oracle_contour(20.0, 40.0, Which::Havelock, &cfg()).unwrap();
    assert!(rel(r.value, 1.3427850086e-1) < 1e-10, "{}", r.value);
    assert!(r.abs_err_estimate <= 1e-13 * r.value.abs());
    // Havelock a = 1.5, x = −10
    let r = oracle_contour(-10.0, 15.0, Which::Havelock, &cfg()).unwrap();
    assert!(rel(r.value, -2.5497382200e-2) < 1e-10, "{}", r.value);
    // Bateman a = 0.5, x = 20, also against the direct method
    let r = oracle_contour(20.0, 10.0, Which::Bateman, &cfg()).unwrap();
    assert!(rel(r.value, 1.0048261319e-3) < 1e-10, "{}", r.value);
    let d = oracle_direct(20.0, 10.0, Which::Bateman, &cfg()).unwrap();
    assert!(rel(d.value, r.value) < 1e-10, "{} {}", d.value, r.value);
}

#[test]
fn contour_at_coalescence() {
    // a = 1 exactly: x = 20 and 60 from Table 1
    let r = oracle_contour(20.0, 20.0, Which::Bateman, &cfg()).unwrap();
    assert!(rel(r.value, 2.6100825169e-1) < 1e-10, "{}", r.value);
    let r = oracle_contour(60.0, 60.0, Which::Havelock, &cfg()).unwrap();
    assert!(rel(r.value, 1.0052911205e-1) < 1e-10, "{}", r.value);
}

#[test]
fn u_integral_reproduces_table_cells() {
    let r = oracle_u_negative(10.0, 2.5, &cfg()).unwrap();
    assert!(rel(r.value, -1.9280268893e-7) < 1e-9, "{}", r.value);
    // the table prints the leading digit as 2; every method gives 3
    let r = oracle_u_negative(20.0, 15.0, &cfg()).unwrap();
    assert!(rel(r.value, -3.1016307406e-19) < 1e-9, "{}", r.value);
    for x in [1.0, 7.5, 40.0] {
        assert_eq!(oracle_u_negative(x, 4.0, &cfg()).unwrap().value, 0.0);
    }
    assert!(oracle_u_negative(-1.0, 1.0, &cfg()).is_err());
}

#[test]
fn cross_checks_agree() {
    let c = oracle_cross_check(10.0, 10.0, Which::Bateman, &cfg()).unwrap();
    assert_eq!(c.certified.method, OracleMethod::Contour);
    assert!(c.deviations.len() == 1 && c.max_rel_deviation() <= 1e-10, "{:?}", c.deviations);

    let c = oracle_cross_check(-8.0, 5.0, Which::Bateman, &cfg()).unwrap();
    let d = c
        .deviations
        .iter()
        .find(|d| d.first == OracleMethod::Contour && d.second == OracleMethod::UIntegral)
        .unwrap();
    assert!(d.rel <= 1e-10, "{d:?}");

    let c = oracle_cross_check(7.0, 0.0, Which::Bateman, &cfg()).unwrap();
    assert!(c.results.len() >= 2);
    for (_, r) in &c.results {
        assert!(rel(r.as_ref().unwrap().value, (-7f64).exp()) < 1e-10);
    }
}

#[test]
fn traced_paths_match_geometry() {
    let paths = trace_path(Regime::PosOsc, 2.0, 200, 5.0).unwrap();
    let upper = paths.iter().find(|p| p.branch == Branch::Upper).unwrap();
    assert!((upper.nodes[0].re - FRAC_PI_2 / 2.0).abs() < 1e-15);
    assert_eq!(upper.nodes[0].im, 0.0);
    assert_eq!(b1_eta(2.0, FRAC_PI_2 / 2.0), Some(0.0));
    // asymptote of the lower branch at c/a = (π/2 − 1)/2
    let lower = paths.iter().find(|p| p.branch == Branch::Lower).unwrap();
    let last = *lower.nodes.last().unwrap();
    assert!((last.re - (FRAC_PI_2 - 1.0) / 2.0).abs() < 1e-5, "{last}");
    assert!(last.im < -5.0);

    let paths = trace_path(Regime::NegArg, 1.5, 128, 10.0).unwrap();
    for p in paths.iter().filter(|p| p.branch != Branch::Axis) {
        for &u in &p.nodes {
            assert_eq!(u.re, FRAC_PI_2);
            assert!((p.psi_at(u).im - 0.75 * std::f64::consts::PI).abs() < 1e-12);
        }
    }
}

#[test]
fn paths_export_as_csv() {
    let paths = trace_path(Regime::PosMono, 0.5, 64, 20.0).unwrap();
    let mut buf = Vec::new();
    write_paths_csv(&paths, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("regime,branch,re_u,im_u,re_psi,im_psi"));
    let first = lines.next().unwrap();
    assert!(first.starts_with("pos-mono,axis,0.00000000000e0,"), "{first}");
    let rows = paths.iter().map(|p| p.nodes.len()).sum::<usize>();
    assert_eq!(text.lines().count(), rows + 1);
}

#[test]
fn rejects_bad_inputs() {
    assert!(trace_path(Regime::PosOsc, 2.0, 10, 20.0).is_err());
    assert!(trace_path(Regime::PosOsc, 0.5, 100, 20.0).is_err());
    assert!(oracle_contour(3.0, 3.0, Which::Bateman, &cfg()).is_err());
    assert!(oracle_contour(10.0, 0.0, Which::Bateman, &cfg()).is_err());
    assert!(oracle_direct(31.0, 1.0, Which::Bateman, &cfg()).is_err());
    assert!(oracle_direct(1.0, -1.0, Which::Bateman, &cfg()).is_err());
}
