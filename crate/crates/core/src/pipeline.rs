//! End-to-end analysis of one curve or moduli point.

use serde::Serialize;

use crate::curves::{subcovers, Genus2Curve, Genus3Curve, UVPoint};
use crate::error::Result;
use crate::exact::Rational;
use crate::invariants::{absolute_invariants, dihedral_invariants, AbsoluteInvariants2, DihedralPoint};
use crate::loci::{classify_aut, locus_t, split_type, trichotomy, AutGroupLabel, LocusVerdict, SplitType, Trichotomy};
use crate::oracle::mp::Cx;
use crate::oracle::{
    curve_from_s_numeric, igusa_invariants, igusa_invariants_cx, subcover_js_from_witness, subcover_sextic_cx, uv_numeric,
    uv_numeric_cx, CxValue, OracleConfig, UvNumeric,
};
use crate::subfields::{j12_roots, j12_roots_corrected, j_e, uv_for_z23, JPair};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PipelineInput {
    Curve(Genus3Curve),
    Moduli(DihedralPoint),
}

/// `(u, v)` with its provenance.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "provenance")]
pub enum UvReport {
    #[serde(rename = "exact-Z2^3")]
    Exact { u: Rational, v: Rational },
    #[serde(rename = "numeric")]
    Numeric { u: CxValue, v: CxValue, residual: f64, convention: &'static str },
}

impl UvReport {
    pub fn exact(&self) -> Option<UVPoint> {
        match self {
            UvReport::Exact { u, v } => Some(UVPoint::new(u.clone(), v.clone())),
            UvReport::Numeric { .. } => None,
        }
    }
}

/// j-invariants of the two degree-4 quotients.
#[derive(Clone, Debug, Serialize)]
pub struct JPairReport {
    /// Roots of the uncorrected quadratic (exact branch only).
    pub uncorrected: Option<JPair>,
    /// Roots of the quadratic with the cubed constant term (exact branch only).
    pub corrected: Option<JPair>,
    /// Quotient j's computed by the oracle from the actual genus-2 curve.
    pub oracle: Option<[CxValue; 2]>,
    pub oracle_residual: Option<f64>,
}

/// Closed-form absolute invariants next to the oracle's.
#[derive(Clone, Debug, Serialize)]
pub struct IgusaCheck {
    pub i1: CxValue,
    pub i2: CxValue,
    pub i3: CxValue,
    /// Max relative deviation from the closed forms.
    pub max_rel_error: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub input: PipelineInput,
    pub s: DihedralPoint,
    pub i: Option<AbsoluteInvariants2>,
    pub i_oracle: Option<IgusaCheck>,
    pub aut_group: Option<AutGroupLabel>,
    pub split_type: Option<SplitType>,
    pub locus: Option<LocusVerdict>,
    pub trichotomy: Option<Trichotomy>,
    #[serde(rename = "jE")]
    pub j_e: Option<Rational>,
    pub uv: Option<UvReport>,
    pub jpair: Option<JPairReport>,
    pub warnings: Vec<String>,
}

fn rel_err(x: &CxValue, exact: &Rational) -> f64 {
    let e = exact.to_f64();
    x.dist(e, 0.0) / e.abs().max(1e-300)
}

/// The genus-2 quotient to hand to the oracle: exact for curve input,
/// numeric (via a preimage of `s`) for moduli input.
enum Quotient {
    Exact(Genus2Curve),
    Numeric(Vec<Cx>),
}

fn quotient(input: &PipelineInput, s: &DihedralPoint, cfg: &OracleConfig) -> Result<Quotient> {
    match input {
        PipelineInput::Curve(x) => Ok(Quotient::Exact(subcovers(x).1)),
        PipelineInput::Moduli(_) => {
            let bits = cfg.precision_bits;
            let sc = s.coords().map(|r| Cx::from_rational(&r, bits));
            Ok(Quotient::Numeric(subcover_sextic_cx(&curve_from_s_numeric(&sc)?)))
        }
    }
}

pub fn full_pipeline(input: &PipelineInput, cfg: &OracleConfig) -> Result<Report> {
    let s = match input {
        PipelineInput::Curve(x) => dihedral_invariants(x.a(), x.b(), x.c()),
        PipelineInput::Moduli(p) => p.clone(),
    };
    let mut warnings = Vec::new();
    let mut report = Report {
        input: input.clone(),
        s: s.clone(),
        i: None,
        i_oracle: None,
        aut_group: None,
        split_type: None,
        locus: None,
        trichotomy: None,
        j_e: None,
        uv: None,
        jpair: None,
        warnings: Vec::new(),
    };

    match absolute_invariants(&s) {
        Ok(i) => report.i = Some(i),
        Err(e) => warnings.push(format!("absolute invariants: {e}")),
    }
    match j_e(&s) {
        Ok(j) => report.j_e = Some(j),
        Err(e) => warnings.push(format!("jE: {e}")),
    }

    if s.s2.is_zero() && s.s4.is_zero() && matches!(input, PipelineInput::Curve(_)) {
        warnings.push("non-faithful fiber: a = c = 0, dihedral invariants forget b; locus steps skipped".into());
        report.warnings = warnings;
        return Ok(report);
    }

    // A moduli point off the curve locus is a domain error.
    let aut = classify_aut(&s)?;
    report.aut_group = Some(aut);
    report.split_type = aut.group().and_then(|g| split_type(g, true).ok());
    report.locus = Some(locus_t(&s)?);
    report.trichotomy = Some(trichotomy(&s)?);

    let quot = match quotient(input, &s, cfg) {
        Ok(q) => Some(q),
        Err(e) => {
            warnings.push(format!("genus-2 quotient: {e}"));
            None
        }
    };

    if let (Some(q), Some(i)) = (&quot, &report.i) {
        let g = match q {
            Quotient::Exact(c) => igusa_invariants(c, cfg),
            Quotient::Numeric(c) => igusa_invariants_cx(c, cfg),
        };
        match g {
            Ok(g) => {
                let err = [rel_err(&g.i1, &i.i1), rel_err(&g.i2, &i.i2), rel_err(&g.i3, &i.i3)]
                    .into_iter()
                    .fold(0.0, f64::max);
                report.i_oracle = Some(IgusaCheck { i1: g.i1, i2: g.i2, i3: g.i3, max_rel_error: Some(err) });
            }
            Err(e) => warnings.push(format!("oracle invariants: {e}")),
        }
    }

    let two_s2_sq = Rational::from_int(2) * s.s2.square();
    if s.s4 == two_s2_sq {
        match uv_for_z23(&s.s2, &s.s3) {
            Ok(p) => report.uv = Some(UvReport::Exact { u: p.u, v: p.v }),
            Err(e) => warnings.push(format!("(u,v) on the Z2^3 stratum: {e}; using the oracle")),
        }
    }

    let numeric: Option<UvNumeric> = match &quot {
        Some(q) => {
            let r = match q {
                Quotient::Exact(c) => uv_numeric(c, cfg),
                Quotient::Numeric(c) => uv_numeric_cx(c, cfg),
            };
            match r {
                Ok(n) => Some(n),
                Err(e) => {
                    warnings.push(format!("numeric (u,v): {e}"));
                    None
                }
            }
        }
        None => None,
    };
    if report.uv.is_none() {
        if let Some(n) = &numeric {
            report.uv = Some(UvReport::Numeric { u: n.u, v: n.v, residual: n.residual, convention: n.convention });
        }
    }

    let mut jp = JPairReport { uncorrected: None, corrected: None, oracle: None, oracle_residual: None };
    if let Some(p) = report.uv.as_ref().and_then(UvReport::exact) {
        match j12_roots(&p) {
            Ok(j) => jp.uncorrected = Some(j),
            Err(e) => warnings.push(format!("j1, j2 (uncorrected quadratic): {e}")),
        }
        jp.corrected = j12_roots_corrected(&p).ok();
    }
    if let Some(n) = &numeric {
        match subcover_js_from_witness(&n.witness) {
            Ok(js) => {
                jp.oracle = Some(js);
                jp.oracle_residual = Some(n.residual);
            }
            Err(e) => warnings.push(format!("oracle j1, j2: {e}")),
        }
    }
    if jp.uncorrected.is_some() || jp.oracle.is_some() {
        report.jpair = Some(jp);
    }
    report.warnings = warnings;
    Ok(report)
}

/// Convenience wrapper for `(a, b, c)` input.
pub fn analyze_curve(a: Rational, b: Rational, c: Rational, cfg: &OracleConfig) -> Result<Report> {
    let x = crate::curves::make_genus3(a, b, c)?;
    full_pipeline(&PipelineInput::Curve(x), cfg)
}

/// Convenience wrapper for moduli-point input.
pub fn analyze_moduli(s: DihedralPoint, cfg: &OracleConfig) -> Result<Report> {
    full_pipeline(&PipelineInput::Moduli(s), cfg)
}
