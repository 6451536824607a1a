use split244::curves::{genus2_from_uv, make_genus3, subcovers, Genus2Curve, UVPoint};
use split244::exact::{q, UniPoly};
use split244::oracle::{
    detect_involution, igusa_invariants, roots, subcover_js, uv_numeric, v4_normal_form, OracleConfig,
};

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn even(a: i64, b: i64) -> Genus2Curve {
    Genus2Curve::new(UniPoly::from_ints(&[1, 0, b, 0, a, 0, 1])).unwrap()
}

#[test]
fn roots_are_certified_and_ordered() {
    let f = UniPoly::from_ints(&[-6, 11, -6, 1]);
    let r = roots(&f, &cfg()).unwrap();
    let re: Vec<f64> = r.iter().map(|z| z.re()).collect();
    assert!((re[0] - 1.0).abs() < 1e-30 && (re[1] - 2.0).abs() < 1e-30 && (re[2] - 3.0).abs() < 1e-30);
    assert!(r.iter().all(|z| z.residual < 1e-30 && z.condition.is_finite()));
}

#[test]
fn precision_flag_changes_accuracy_not_answers() {
    let f = UniPoly::from_ints(&[2, 0, -1]);
    for bits in [64, 128, 256] {
        let r = roots(&f, &cfg().with_precision(bits)).unwrap();
        assert!((r[1].re() - 2f64.sqrt()).abs() < 1e-15);
    }
}

#[test]
fn even_sextic_witness_is_x_to_minus_x() {
    let w = detect_involution(&even(2, 3), &cfg()).unwrap().unwrap();
    assert!(w.residual < 1e-25);
    assert!(w.alpha.abs_f64() > 0.0);
    assert!(w.beta.abs_f64() < 1e-25 && w.gamma.abs_f64() < 1e-25);
    let nf = v4_normal_form(&even(2, 3), &w, &cfg()).unwrap();
    let ab = [nf.a, nf.b];
    assert!(ab.iter().any(|z| z.dist(2.0, 0.0) < 1e-20) && ab.iter().any(|z| z.dist(3.0, 0.0) < 1e-20));
}

#[test]
fn swapped_normal_form_gives_the_same_uv() {
    let a = uv_numeric(&even(2, 3), &cfg()).unwrap();
    let b = uv_numeric(&even(3, 2), &cfg()).unwrap();
    assert!(a.u.dist(b.u.re, b.u.im) < 1e-20 && a.v.dist(b.v.re, b.v.im) < 1e-20);
    assert!(a.u.dist(6.0, 0.0) < 1e-20 && a.v.dist(35.0, 0.0) < 1e-20);
}

#[test]
fn example_curve_uv_and_js() {
    let x = make_genus3(q(1, 1), q(1, 1), q(1, 1)).unwrap();
    let (_, g) = subcovers(&x);
    let n = uv_numeric(&g, &cfg()).unwrap();
    assert!(n.u.dist(9.0, 0.0) < 1e-9 && n.v.dist(-150.8, 0.0) < 1e-9);
    let js = subcover_js(&g, &n.witness, &cfg()).unwrap();
    assert!(js[0].dist(2048.0, 0.0) < 1e-6 && js[1].dist(11059.2, 0.0) < 1e-6);
    let i = igusa_invariants(&g, &cfg()).unwrap();
    assert!(i.i1.dist(-9.6, 0.0) < 1e-12 && i.i2.dist(86.4, 0.0) < 1e-12 && i.i3.dist(0.0025, 0.0) < 1e-15);
}

#[test]
fn double_root_point_has_equal_js() {
    let c = genus2_from_uv(&UVPoint::new(q(8, 1), q(45, 1))).unwrap();
    let n = uv_numeric(&c, &cfg()).unwrap();
    let js = subcover_js(&c, &n.witness, &cfg()).unwrap();
    assert!(js[0].dist(256.0, 0.0) < 1e-6 && js[1].dist(256.0, 0.0) < 1e-6);
}

#[test]
fn generic_sextic_has_no_witness() {
    let c = Genus2Curve::new(UniPoly::from_ints(&[1, 3, -2, 5, 7, -1, 2])).unwrap();
    assert!(detect_involution(&c, &cfg()).unwrap().is_none());
}

#[test]
fn moduli_invariance_of_igusa() {
    let p = UVPoint::new(q(3, 1), q(-7, 2));
    let c = genus2_from_uv(&p).unwrap();
    let (a, b) = (even(2, 3), c);
    let ia = igusa_invariants(&a, &cfg()).unwrap();
    let n = uv_numeric(&a, &cfg()).unwrap();
    // (u, v) of the even sextic, rebuilt and measured again
    let back = genus2_from_uv(&UVPoint::new(q(6, 1), q(35, 1))).unwrap();
    let ib = igusa_invariants(&back, &cfg()).unwrap();
    assert!(n.u.dist(6.0, 0.0) < 1e-20);
    for (x, y) in [(ia.i1, ib.i1), (ia.i2, ib.i2), (ia.i3, ib.i3)] {
        assert!(x.dist(y.re, y.im) <= 1e-9 * y.abs().max(1.0), "{x:?} {y:?}");
    }
    assert!(igusa_invariants(&b, &cfg()).is_ok());
}
