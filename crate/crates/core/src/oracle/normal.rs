//! V₄ normal form `y² = x⁶ + Ax⁴ + Bx² + 1`, numeric `(u, v)` and the
//! j-invariants of the two elliptic quotients.

use std::sync::OnceLock;

use serde::Serialize;

use super::involution::{chordal, sextic_points, HomPoint, InvolutionWitness};
use super::mp::{fl_int, Cx};
use super::{cmp_cx, CxValue, OracleConfig};
use crate::curves::Genus2Curve;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct NormalForm {
    pub a: CxValue,
    pub b: CxValue,
    /// `z³ + Az² + Bz + 1` and `z⁴ + Az³ + Bz² + z`, ascending.
    pub quotient_cubic: [CxValue; 4],
    pub quotient_quartic: [CxValue; 5],
    /// Worst of the witness residual and the `w ↦ −w` pairing mismatch.
    pub residual: f64,
    #[serde(skip)]
    pub(crate) a_cx: Cx,
    #[serde(skip)]
    pub(crate) b_cx: Cx,
    /// Elementary symmetric functions of the squared normalised roots.
    #[serde(skip)]
    pub(crate) e: [Cx; 3],
}

/// Fixed points of the involution as eigenvectors, the one closer to 0 first.
fn fixed_points(w: &InvolutionWitness) -> Result<(HomPoint, HomPoint)> {
    let (al, be, ga) = (&w.alpha, &w.beta, &w.gamma);
    let d2 = &(al * al) + &(be * ga);
    if d2.abs_f64() < 1e-24 {
        return Err(Error::DegenerateTransform("involution has a single fixed point"));
    }
    let d = d2.sqrt();
    let eig = |lam: &Cx| {
        let v1 = HomPoint { x: be.clone(), z: lam - al };
        let v2 = HomPoint { x: lam + al, z: ga.clone() };
        let n1 = v1.x.norm_sqr() + v1.z.norm_sqr();
        let n2 = v2.x.norm_sqr() + v2.z.norm_sqr();
        if n1 >= n2 {
            v1
        } else {
            v2
        }
    };
    let (p, m) = (eig(&d), eig(&-&d));
    // |x_p/z_p| < |x_m/z_m|  <=>  |x_p||z_m| < |x_m||z_p|
    let lhs = p.x.abs() * m.z.abs();
    let rhs = m.x.abs() * p.z.abs();
    Ok(if lhs <= rhs { (p, m) } else { (m, p) })
}

pub(crate) fn normal_form_of(w: &InvolutionWitness) -> Result<NormalForm> {
    let (f1, f2) = fixed_points(w)?;
    let pts = w.points();
    // T sends f1 to 0 and f2 to infinity.
    let t: Vec<HomPoint> = pts
        .iter()
        .map(|p| HomPoint { x: &(&p.x * &f1.z) - &(&p.z * &f1.x), z: &(&p.x * &f2.z) - &(&p.z * &f2.x) })
        .collect();
    let origin = HomPoint { x: Cx::zero(1), z: Cx::one(1) };
    let inf = HomPoint { x: Cx::one(1), z: Cx::zero(1) };
    for p in &t {
        if chordal(p, &origin) < 1e-20 || chordal(p, &inf) < 1e-20 {
            return Err(Error::DegenerateTransform("a branch point sits at a fixed point of the involution"));
        }
    }
    let ws: Vec<Cx> = t.iter().map(|p| p.x.div(&p.z)).collect();
    let mut mismatch: f64 = 0.0;
    let mut s = Vec::with_capacity(3);
    for &(i, j) in &w.pairing {
        let (a, b) = (&ws[i], &ws[j]);
        mismatch = mismatch.max((a + b).abs_f64() / a.abs_f64().max(b.abs_f64()));
        s.push(-(a * b));
    }
    let e1 = &(&s[0] + &s[1]) + &s[2];
    let e2 = &(&(&s[0] * &s[1]) + &(&s[0] * &s[2])) + &(&s[1] * &s[2]);
    let e3 = &(&s[0] * &s[1]) * &s[2];
    let mu = (-&e3).cbrt();
    let a = -(e1.div(&mu));
    let b = e2.div(&mu.square());
    let one = CxValue { re: 1.0, im: 0.0 };
    let zero = CxValue { re: 0.0, im: 0.0 };
    let (av, bv) = (CxValue::from(&a), CxValue::from(&b));
    Ok(NormalForm {
        a: av,
        b: bv,
        quotient_cubic: [one, bv, av, one],
        quotient_quartic: [zero, one, bv, av, one],
        residual: w.residual.max(mismatch),
        a_cx: a,
        b_cx: b,
        e: [e1, e2, e3],
    })
}

/// Normal form of `c` with respect to the involution `w`.
pub fn v4_normal_form(c: &Genus2Curve, w: &InvolutionWitness, cfg: &OracleConfig) -> Result<NormalForm> {
    let _ = (c, cfg);
    normal_form_of(w)
}

/// Candidate `(u, v)` conventions on the normal form, primary first.
type Convention = (&'static str, fn(&Cx, &Cx) -> (Cx, Cx));

const CONVENTIONS: [Convention; 3] = [
    ("u = AB, v = A^3 + B^3", |a, b| (a * b, &a.powu(3) + &b.powu(3))),
    ("u = AB, v = -(A^3 + B^3)", |a, b| (a * b, -(&a.powu(3) + &b.powu(3)))),
    ("u = -AB, v = A^3 + B^3", |a, b| (-(a * b), &a.powu(3) + &b.powu(3))),
];

/// Numeric `(u, v)` with provenance.
#[derive(Clone, Debug, Serialize)]
pub struct UvNumeric {
    pub u: CxValue,
    pub v: CxValue,
    pub convention: &'static str,
    pub residual: f64,
    pub normal_form: NormalForm,
    pub witness: InvolutionWitness,
}

fn example_points(cfg: &OracleConfig) -> Result<Vec<HomPoint>> {
    let bits = cfg.precision_bits;
    let c: Vec<Cx> = [0, 1, 1, 1, 1, 1].iter().map(|&k| Cx::from_real(fl_int(k, bits), bits)).collect();
    sextic_points(&c, cfg)
}

/// Index of the accepted convention, fixed once by reproducing
/// `(9, −754/5)` on `y² = x(x⁴ + x³ + x² + x + 1)`.
fn calibrated_convention() -> std::result::Result<usize, String> {
    static CELL: OnceLock<std::result::Result<usize, String>> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = OracleConfig::default();
        let w = example_points(&cfg)
            .ok()
            .and_then(|p| super::involution::best_involution(&p))
            .ok_or_else(|| "no involution on the anchor curve".to_string())?;
        let nf = normal_form_of(&w).map_err(|e| e.to_string())?;
        let mut tried = Vec::new();
        for (k, (name, f)) in CONVENTIONS.iter().enumerate() {
            let (u, v) = f(&nf.a_cx, &nf.b_cx);
            let (u, v) = (CxValue::from(&u), CxValue::from(&v));
            if u.dist(9.0, 0.0) < 1e-9 * 9.0 && v.dist(-150.8, 0.0) < 1e-9 * 150.8 {
                return Ok(k);
            }
            tried.push(format!("{name}: u = {}{:+}i, v = {}{:+}i", u.re, u.im, v.re, v.im));
        }
        Err(format!("no (u,v) convention reproduces (9, -754/5): {}", tried.join("; ")))
    })
    .clone()
}

/// The accepted `(u, v)` convention.
pub fn uv_convention() -> Result<&'static str> {
    calibrated_convention().map(|k| CONVENTIONS[k].0).map_err(Error::CalibrationFailure)
}

/// `(u, v)` of a genus-2 curve with an extra involution.
pub fn uv_numeric(c: &Genus2Curve, cfg: &OracleConfig) -> Result<UvNumeric> {
    let bits = cfg.precision_bits;
    let coeffs: Vec<Cx> = c.homogeneous_coeffs().iter().map(|r| Cx::from_rational(r, bits)).collect();
    uv_numeric_cx(&coeffs, cfg)
}

pub fn uv_numeric_cx(coeffs: &[Cx], cfg: &OracleConfig) -> Result<UvNumeric> {
    let k = calibrated_convention().map_err(Error::CalibrationFailure)?;
    let w = super::detect_involution_cx(coeffs, cfg)?.ok_or(Error::NoInvolution)?;
    let nf = normal_form_of(&w)?;
    let (name, f) = CONVENTIONS[k];
    let (u, v) = f(&nf.a_cx, &nf.b_cx);
    Ok(UvNumeric {
        u: CxValue::from(&u),
        v: CxValue::from(&v),
        convention: name,
        residual: nf.residual,
        normal_form: nf,
        witness: w,
    })
}

/// `j` of `w² = a0 z⁴ + a1 z³ + a2 z² + a3 z + a4` via `I`, `J`.
fn j_quartic_cx(a: [&Cx; 5], singular: Error) -> Result<Cx> {
    let bits = a[0].precision().max(a[1].precision());
    let k = |n: i64| Cx::from_real(fl_int(n, bits), bits);
    let i = &(&(&k(12) * &(a[0] * a[4])) - &(&k(3) * &(a[1] * a[3]))) + &a[2].square();
    let j = &(&(&(&(&k(72) * &(&(a[0] * a[2]) * a[4])) - &(&k(27) * &(a[0] * &a[3].square())))
        - &(&k(27) * &(&a[1].square() * a[4])))
        + &(&k(9) * &(&(a[1] * a[2]) * a[3])))
        - &(&k(2) * &a[2].powu(3));
    let i3 = &k(4) * &i.powu(3);
    let den = &i3 - &j.square();
    if den.abs_f64() <= 1e-24 * i3.abs_f64().max(j.square().abs_f64()) {
        return Err(singular);
    }
    Ok((&k(1728) * &i3).div(&den))
}

fn quotient_js(e: &[Cx; 3]) -> Result<[Cx; 2]> {
    let bits = e[0].precision();
    let one = Cx::one(bits);
    let zero = Cx::zero(bits);
    let (m1, m3) = (-&e[0], -&e[2]);
    // w² = z³ − e1 z² + e2 z − e3 and w² = z(z³ − e1 z² + e2 z − e3)
    let ja = j_quartic_cx([&zero, &one, &m1, &e[1], &m3], Error::SingularCubic)?;
    let jb = j_quartic_cx([&one, &m1, &e[1], &m3, &zero], Error::SingularQuartic)?;
    Ok([ja, jb])
}

/// j-invariants of the quotients `v² = z³ + Az² + Bz + 1` and
/// `v² = z(z³ + Az² + Bz + 1)`, ordered by real part then imaginary part.
pub fn subcover_js(c: &Genus2Curve, w: &InvolutionWitness, cfg: &OracleConfig) -> Result<[CxValue; 2]> {
    let _ = (c, cfg);
    subcover_js_from_witness(w)
}

pub fn subcover_js_from_witness(w: &InvolutionWitness) -> Result<[CxValue; 2]> {
    let nf = normal_form_of(w)?;
    let [ja, jb] = quotient_js(&nf.e)?;
    let mut out = [CxValue::from(&ja), CxValue::from(&jb)];
    out.sort_by(cmp_cx);
    Ok(out)
}

/// Detects the involution on a complex sextic and returns the ordered
/// quotient j-invariants together with the witness residual.
pub fn subcover_js_cx(coeffs: &[Cx], cfg: &OracleConfig) -> Result<([CxValue; 2], f64)> {
    let w = super::detect_involution_cx(coeffs, cfg)?.ok_or(Error::NoInvolution)?;
    Ok((subcover_js_from_witness(&w)?, w.residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{genus2_from_uv, UVPoint};
    use crate::exact::{q, UniPoly};
    use crate::oracle::detect_involution;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn even_sextic_is_already_normal() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 3, 0, 2, 0, 1])).unwrap();
        let w = detect_involution(&c, &cfg()).unwrap().unwrap();
        let nf = v4_normal_form(&c, &w, &cfg()).unwrap();
        assert!(nf.a.dist(2.0, 0.0) < 1e-25 && nf.b.dist(3.0, 0.0) < 1e-25);
    }

    #[test]
    fn reciprocal_image_swaps_a_and_b() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 2, 0, 3, 0, 1])).unwrap();
        let w = detect_involution(&c, &cfg()).unwrap().unwrap();
        let nf = v4_normal_form(&c, &w, &cfg()).unwrap();
        assert!(nf.a.dist(3.0, 0.0) < 1e-25 && nf.b.dist(2.0, 0.0) < 1e-25);
        let uv = uv_numeric(&c, &cfg()).unwrap();
        assert!(uv.u.dist(6.0, 0.0) < 1e-25 && uv.v.dist(35.0, 0.0) < 1e-25);
    }

    #[test]
    fn calibration_accepts_primary_convention() {
        assert_eq!(uv_convention().unwrap(), "u = AB, v = A^3 + B^3");
        let c = Genus2Curve::new(UniPoly::from_ints(&[0, 1, 1, 1, 1, 1])).unwrap();
        let uv = uv_numeric(&c, &cfg()).unwrap();
        assert!(uv.u.dist(9.0, 0.0) < 1e-9 && uv.v.dist(-150.8, 0.0) < 1e-9);
    }

    #[test]
    fn d8_normal_form_lands_on_cond_d8() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 5, 0, 5, 0, 1])).unwrap();
        let uv = uv_numeric(&c, &cfg()).unwrap();
        let (u, v) = (uv.u.re, uv.v.re);
        assert!((v * v - 4.0 * u * u * u).abs() < 1e-20);
    }

    #[test]
    fn reconstruction_round_trip() {
        let c = genus2_from_uv(&UVPoint::new(q(0, 1), q(1, 1))).unwrap();
        let uv = uv_numeric(&c, &cfg()).unwrap();
        assert!(uv.u.dist(0.0, 0.0) < 1e-20 && uv.v.dist(1.0, 0.0) < 1e-20);
    }

    #[test]
    fn example_quotient_js() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[0, 1, 1, 1, 1, 1])).unwrap();
        let w = detect_involution(&c, &cfg()).unwrap().unwrap();
        let [ja, jb] = subcover_js(&c, &w, &cfg()).unwrap();
        assert!(ja.dist(2048.0, 0.0) < 1e-6);
        assert!(jb.dist(55296.0 / 5.0, 0.0) < 1e-6);
    }

    #[test]
    fn equal_quotients_on_d8_and_line() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 5, 0, 5, 0, 1])).unwrap();
        let w = detect_involution(&c, &cfg()).unwrap().unwrap();
        let [ja, jb] = subcover_js(&c, &w, &cfg()).unwrap();
        assert!(ja.dist(jb.re, jb.im) < 1e-12 * ja.abs().max(1.0));

        let c = genus2_from_uv(&UVPoint::new(q(8, 1), q(45, 1))).unwrap();
        let w = detect_involution(&c, &cfg()).unwrap().unwrap();
        let [ja, jb] = subcover_js(&c, &w, &cfg()).unwrap();
        assert!(ja.dist(256.0, 0.0) < 1e-6 && jb.dist(256.0, 0.0) < 1e-6);
    }
}
