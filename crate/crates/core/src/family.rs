//! Points on the components `g1..g5` cut with `F1 = 0`, checked by the oracle.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::invariants::delta_s_poly;
use crate::loci::{f1, FrakTComponent};
use crate::oracle::mp::Cx;
use crate::oracle::{
    curve_from_s_numeric, eval_tripoly_cx, roots, roots_cx, specialize_cx, subcover_js_from_witness,
    subcover_sextic_cx, uv_numeric_cx, ComplexApprox, CxValue, OracleConfig,
};
use crate::sampling::{batch_map, Sampler};

/// Relative size of an imaginary part still read as a real root. Loose on
/// purpose: a double root only resolves to about half the working digits.
const REAL_ROOT_TOL: f64 = 1e-10;
/// `|Δ_s|` below this fraction of its term scale counts as zero.
const DELTA_S_TOL: f64 = 1e-20;
/// Relative gap under which the two quotient j's count as equal.
pub const J_EQUAL_TOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum S4Value {
    Exact(Rational),
    Numeric(CxValue),
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PointOutcome {
    Verified {
        u: CxValue,
        v: CxValue,
        js: [CxValue; 2],
        residual: f64,
        /// `|j1 − j2| / max(1, |j1|, |j2|)`
        j_gap: f64,
        j_equal: bool,
        /// `|v − 9u + 27| / (1 + |u|³ + |v|²)`
        line_residual: f64,
        /// `|v² − 4u³| / (1 + |u|³ + |v|²)`
        d8_residual: f64,
    },
    Dropout {
        reason: String,
    },
}

impl PointOutcome {
    /// `min(line, d8)` residual, if verified.
    pub fn iso_residual(&self) -> Option<f64> {
        match self {
            PointOutcome::Verified { line_residual, d8_residual, .. } => Some(line_residual.min(*d8_residual)),
            PointOutcome::Dropout { .. } => None,
        }
    }

    pub fn residual(&self) -> Option<f64> {
        match self {
            PointOutcome::Verified { residual, .. } => Some(*residual),
            PointOutcome::Dropout { .. } => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyPoint {
    /// Index of the sampled `s2` this point came from.
    pub index: usize,
    pub component: FrakTComponent,
    pub s2: Rational,
    pub s4: S4Value,
    pub s3: CxValue,
    pub s3_condition: f64,
    pub outcome: PointOutcome,
}

/// Real roots, one per cluster (a multiple root is reported once).
fn real_roots(r: Vec<ComplexApprox>) -> Vec<ComplexApprox> {
    let mut out: Vec<ComplexApprox> = Vec::new();
    for z in r.into_iter().filter(|z| z.im().abs() <= REAL_ROOT_TOL * z.re().abs().max(1.0)) {
        if !out.iter().any(|w| (w.re() - z.re()).abs() <= REAL_ROOT_TOL * z.re().abs().max(1.0)) {
            out.push(z);
        }
    }
    out
}

fn real_part(z: &Cx) -> Cx {
    Cx::from_real(z.re.clone(), z.precision())
}

/// `s4` on component `g` above `s2`: exact where `g` is linear in `s4`,
/// otherwise the real roots.
pub fn s4_candidates(g: FrakTComponent, s2: &Rational, cfg: &OracleConfig) -> Result<Vec<(S4Value, Cx)>> {
    let bits = cfg.precision_bits;
    if let Some(s4) = g.solve_s4_exact(s2) {
        let cx = Cx::from_rational(&s4, bits);
        return Ok(vec![(S4Value::Exact(s4), cx)]);
    }
    let poly = g.poly().specialize(2, &[s2.clone(), Rational::zero(), Rational::zero()]);
    if poly.degree().unwrap_or(0) == 0 {
        return Err(Error::DegreeTooLow { need: 1, got: 0 });
    }
    Ok(real_roots(roots(&poly, cfg)?)
        .into_iter()
        .map(|z| {
            let r = real_part(z.value());
            (S4Value::Numeric(CxValue::from(&r)), r)
        })
        .collect())
}

/// Real roots `s3` of `F1(s2, ·, s4)`.
pub fn s3_candidates(s2: &Rational, s4: &S4Value, s4_cx: &Cx, cfg: &OracleConfig) -> Result<Vec<ComplexApprox>> {
    let r = match s4 {
        S4Value::Exact(s4) => {
            let poly = f1().specialize(1, &[s2.clone(), Rational::zero(), s4.clone()]);
            if poly.degree().unwrap_or(0) == 0 {
                return Err(Error::DegreeTooLow { need: 1, got: 0 });
            }
            roots(&poly, cfg)?
        }
        S4Value::Numeric(_) => {
            let bits = cfg.precision_bits;
            let at = [Cx::from_rational(s2, bits), Cx::zero(bits), s4_cx.clone()];
            roots_cx(&specialize_cx(f1(), 1, &at), cfg)?
        }
    };
    Ok(real_roots(r))
}

/// Oracle check of one point `(s2, s3, s4)`.
pub fn evaluate_point(s: &[Cx; 3], cfg: &OracleConfig) -> PointOutcome {
    match evaluate(s, cfg) {
        Ok(o) => o,
        Err(e) => PointOutcome::Dropout { reason: e.to_string() },
    }
}

fn evaluate(s: &[Cx; 3], cfg: &OracleConfig) -> Result<PointOutcome> {
    let (ds, scale) = eval_tripoly_cx(delta_s_poly(), s);
    if ds.abs_f64() <= DELTA_S_TOL * scale {
        return Err(Error::NotACurve);
    }
    let sextic = subcover_sextic_cx(&curve_from_s_numeric(s)?);
    let uv = uv_numeric_cx(&sextic, cfg)?;
    let js = subcover_js_from_witness(&uv.witness)?;
    let j_gap = js[0].dist(js[1].re, js[1].im) / js[0].abs().max(js[1].abs()).max(1.0);
    let (u, v) = (uv.u, uv.v);
    // complex arithmetic in f64 is enough for residuals at the 1e-6 level
    let (ur, ui, vr, vi) = (u.re, u.im, v.re, v.im);
    let norm = 1.0 + u.abs().powi(3) + v.abs().powi(2);
    let line = (vr - 9.0 * ur + 27.0).hypot(vi - 9.0 * ui);
    let (u2r, u2i) = (ur * ur - ui * ui, 2.0 * ur * ui);
    let (u3r, u3i) = (u2r * ur - u2i * ui, u2r * ui + u2i * ur);
    let (v2r, v2i) = (vr * vr - vi * vi, 2.0 * vr * vi);
    let d8 = (v2r - 4.0 * u3r).hypot(v2i - 4.0 * u3i);
    Ok(PointOutcome::Verified {
        u,
        v,
        js,
        residual: uv.residual,
        j_gap,
        j_equal: j_gap < J_EQUAL_TOL,
        line_residual: line / norm,
        d8_residual: d8 / norm,
    })
}

/// All points above one `s2`, in root order.
pub fn family_points(g: FrakTComponent, s2: &Rational, index: usize, cfg: &OracleConfig) -> Vec<FamilyPoint> {
    let mut out = Vec::new();
    let drop = |s4: S4Value, reason: String| FamilyPoint {
        index,
        component: g,
        s2: s2.clone(),
        s4,
        s3: CxValue { re: f64::NAN, im: f64::NAN },
        s3_condition: f64::NAN,
        outcome: PointOutcome::Dropout { reason },
    };
    let s4s = match s4_candidates(g, s2, cfg) {
        Ok(v) => v,
        Err(e) => {
            out.push(drop(S4Value::Numeric(CxValue { re: f64::NAN, im: f64::NAN }), format!("s4: {e}")));
            return out;
        }
    };
    for (s4, s4_cx) in s4s {
        let s3s = match s3_candidates(s2, &s4, &s4_cx, cfg) {
            Ok(v) => v,
            Err(e) => {
                out.push(drop(s4, format!("s3: {e}")));
                continue;
            }
        };
        for s3 in s3s {
            let s3_cx = real_part(s3.value());
            let s = [Cx::from_rational(s2, cfg.precision_bits), s3_cx.clone(), s4_cx.clone()];
            out.push(FamilyPoint {
                index,
                component: g,
                s2: s2.clone(),
                s4: s4.clone(),
                s3: CxValue::from(&s3_cx),
                s3_condition: s3.condition,
                outcome: evaluate_point(&s, cfg),
            });
        }
    }
    out
}

/// Points above every `s2` in `s2_values`, ordered by input index.
pub fn family_scan(g: FrakTComponent, s2_values: &[Rational], cfg: &OracleConfig) -> Vec<FamilyPoint> {
    batch_map(s2_values, |i, s2| family_points(g, s2, i, cfg)).into_iter().flatten().collect()
}

/// `count` seeded rationals in `[lo, hi]` with denominators up to 6.
pub fn sample_s2_values(seed: u64, count: usize, lo: i64, hi: i64) -> Vec<Rational> {
    let mut s = Sampler::new(seed);
    (0..count).map(|_| s.rational(lo, hi, 6)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn exact_s4_on_linear_components() {
        let cfg = OracleConfig::default();
        let c = s4_candidates(FrakTComponent::G1, &q(25, 2), &cfg).unwrap();
        assert!(matches!(&c[0].0, S4Value::Exact(r) if *r == q(625, 2)));
        let c = s4_candidates(FrakTComponent::G2, &q(4, 1), &cfg).unwrap();
        assert!(matches!(&c[0].0, S4Value::Exact(r) if *r == q(-32, 1)));
    }

    #[test]
    fn numeric_s4_on_g5_are_roots() {
        let cfg = OracleConfig::default();
        let s2 = q(1, 1);
        let c = s4_candidates(FrakTComponent::G5, &s2, &cfg).unwrap();
        let poly = FrakTComponent::G5.poly();
        for (_, s4) in &c {
            let (v, scale) = eval_tripoly_cx(poly, &[Cx::from_rational(&s2, 128), Cx::zero(128), s4.clone()]);
            assert!(v.abs_f64() < 1e-25 * scale);
        }
    }
}
