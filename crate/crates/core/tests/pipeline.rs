use split244::exact::q;
use split244::invariants::DihedralPoint;
use split244::loci::{AutGroupLabel, Trichotomy};
use split244::oracle::OracleConfig;
use split244::pipeline::{analyze_curve, analyze_moduli, UvReport};
use split244::Error;

#[test]
fn example_report_has_every_anchor() {
    let r = analyze_curve(q(1, 1), q(1, 1), q(1, 1), &OracleConfig::default()).unwrap();
    assert_eq!(r.s, DihedralPoint::from_ints(1, 2, 2));
    assert_eq!(r.j_e, Some(q(2048, 1)));
    assert_eq!(r.aut_group, Some(AutGroupLabel::Z2Cubed));
    assert_eq!(r.trichotomy, Some(Trichotomy::Z2CubedCase));
    assert!(matches!(&r.uv, Some(UvReport::Exact { u, v }) if *u == q(9, 1) && *v == q(-754, 5)));
    let jp = r.jpair.as_ref().unwrap();
    let js = jp.oracle.unwrap();
    assert!(js[0].dist(2048.0, 0.0) < 1e-6 && js[1].dist(11059.2, 0.0) < 1e-6);
    assert!(r.i_oracle.as_ref().unwrap().max_rel_error.unwrap() < 1e-9);
    assert!(r.warnings.is_empty(), "{:?}", r.warnings);

    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["jE"], "2048");
    assert_eq!(v["uv"]["provenance"], "exact-Z2^3");
    assert_eq!(v["aut_group"], "Z2^3");
}

#[test]
fn moduli_input_gives_the_same_classification() {
    let cfg = OracleConfig::default();
    let a = analyze_curve(q(1, 1), q(1, 1), q(1, 1), &cfg).unwrap();
    let b = analyze_moduli(DihedralPoint::from_ints(1, 2, 2), &cfg).unwrap();
    assert_eq!(a.aut_group, b.aut_group);
    assert_eq!(a.locus, b.locus);
    assert_eq!(a.trichotomy, b.trichotomy);
    assert_eq!(a.j_e, b.j_e);
    let js = b.jpair.unwrap().oracle.unwrap();
    assert!(js[0].dist(2048.0, 0.0) < 1e-6);
}

#[test]
fn singular_curve_is_a_domain_error() {
    let e = analyze_curve(q(1, 1), q(0, 1), q(1, 1), &OracleConfig::default()).unwrap_err();
    assert_eq!(e, Error::SingularCurve);
}

#[test]
fn degenerate_fiber_warns_and_stops() {
    let r = analyze_curve(q(0, 1), q(0, 1), q(0, 1), &OracleConfig::default()).unwrap();
    assert!(r.warnings.iter().any(|w| w.contains("non-faithful")));
    assert!(r.aut_group.is_none() && r.locus.is_none() && r.uv.is_none());
}

#[test]
fn generic_curve_without_extra_involution() {
    let r = analyze_curve(q(1, 1), q(2, 1), q(3, 1), &OracleConfig::default()).unwrap();
    assert_eq!(r.aut_group, Some(AutGroupLabel::Z2xZ2));
    assert!(r.uv.is_none());
    assert!(r.warnings.iter().any(|w| w.contains("involution")));
    assert!(r.i_oracle.unwrap().max_rel_error.unwrap() < 1e-9);
}

#[test]
fn reports_are_deterministic() {
    let cfg = OracleConfig::default();
    let a = serde_json::to_string(&analyze_curve(q(2, 3), q(-1, 1), q(5, 2), &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&analyze_curve(q(2, 3), q(-1, 1), q(5, 2), &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn off_locus_moduli_point_is_rejected() {
    // image of the singular octavic (1, 0, 1)
    let e = analyze_moduli(DihedralPoint::from_ints(1, 0, 2), &OracleConfig::default()).unwrap_err();
    assert_eq!(e, Error::NotACurve);
}
