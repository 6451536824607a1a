//! j-invariants of the three elliptic subcovers: the closed form for the
//! degree-2 quotient, the quadratic satisfied by the two degree-4 quotients,
//! the (u, v) formulas on the Z2^3 stratum and the isomorphic-subfields test.

use serde::{Deserialize, Serialize};

use crate::curves::UVPoint;
use crate::error::{Error, Result};
use crate::exact::{QuadExtValue, Rational};
use crate::invariants::{delta_s, DihedralPoint};

/// The two roots of a monic quadratic `j² + Bj + C`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct JPair {
    pub j1: QuadExtValue,
    pub j2: QuadExtValue,
    pub equal: bool,
}

/// `N = −s3² − 12s4 − 24s2² + 3s2s4 + 6s2³`.
pub fn j_e_numerator_base(p: &DihedralPoint) -> Rational {
    let r = Rational::from_int;
    let (s2, s3, s4) = (&p.s2, &p.s3, &p.s4);
    -s3.square() - r(12) * s4 - r(24) * s2.square() + r(3) * s2 * s4 + r(6) * s2.pow(3)
}

/// `j(E) = 256·N³ / ((s4 + 2s2²)·Δ_s)`.
pub fn j_e(p: &DihedralPoint) -> Result<Rational> {
    let m = p.m();
    if m.is_zero() {
        return Err(Error::DenominatorZero("s4 + 2*s2^2"));
    }
    let ds = delta_s(p);
    if ds.is_zero() {
        return Err(Error::DenominatorZero("Delta_s"));
    }
    Ok(Rational::from_int(256) * j_e_numerator_base(p).pow(3) / (m * ds))
}

/// `u² + 18u − 4v − 27`.
pub fn j12_denominator(p: &UVPoint) -> Rational {
    let r = Rational::from_int;
    p.u.square() + r(18) * &p.u - r(4) * &p.v - r(27)
}

fn j12_b(p: &UVPoint, den: &Rational) -> Rational {
    let r = Rational::from_int;
    let (u, v) = (&p.u, &p.v);
    let n1 = r(2) * u.pow(3) - r(54) * u.square() + r(9) * u * v - v.square() + r(27) * v;
    r(256) * n1 / den
}

fn j12_c_base(p: &UVPoint) -> Rational {
    let r = Rational::from_int;
    p.u.square() + r(9) * &p.u - r(3) * &p.v
}

/// `(B, C)` of the uncorrected quadratic:
/// `B = 256·(2u³ − 54u² + 9uv − v² + 27v)/den`, `C = 65536·(u² + 9u − 3v)/den²`.
pub fn j12_quadratic(p: &UVPoint) -> Result<(Rational, Rational)> {
    let den = j12_denominator(p);
    if den.is_zero() {
        return Err(Error::DenominatorZero("u^2 + 18u - 4v - 27"));
    }
    let b = j12_b(p, &den);
    let c = Rational::from_int(65536) * j12_c_base(p) / den.square();
    Ok((b, c))
}

/// `(B, C)` with the constant term `65536·(u² + 9u − 3v)³/den²`, which is the
/// product of the j-invariants of the two elliptic quotients. Its discriminant
/// is `65536·(v² − 4u³)(v − 9u + 27)²/den²`.
pub fn j12_quadratic_corrected(p: &UVPoint) -> Result<(Rational, Rational)> {
    let den = j12_denominator(p);
    if den.is_zero() {
        return Err(Error::DenominatorZero("u^2 + 18u - 4v - 27"));
    }
    let b = j12_b(p, &den);
    let c = Rational::from_int(65536) * j12_c_base(p).pow(3) / den.square();
    Ok((b, c))
}

/// Roots `(−B ± √(B² − 4C))/2`, the `+` root first.
pub fn quadratic_roots(b: &Rational, c: &Rational) -> JPair {
    let disc = b.square() - Rational::from_int(4) * c;
    let half = Rational::new(1, 2);
    let rat = -b * &half;
    let j1 = QuadExtValue::new(rat.clone(), half.clone(), disc.clone());
    let j2 = QuadExtValue::new(rat, -half, disc.clone());
    JPair { j1, j2, equal: disc.is_zero() }
}

pub fn j12_roots(p: &UVPoint) -> Result<JPair> {
    let (b, c) = j12_quadratic(p)?;
    Ok(quadratic_roots(&b, &c))
}

pub fn j12_roots_corrected(p: &UVPoint) -> Result<JPair> {
    let (b, c) = j12_quadratic_corrected(p)?;
    Ok(quadratic_roots(&b, &c))
}

/// `P = −s3² − 8s2s3 − 16s2² + 16s2³`.
pub fn z23_p(s2: &Rational, s3: &Rational) -> Rational {
    let r = Rational::from_int;
    -s3.square() - r(8) * s2 * s3 - r(16) * s2.square() + r(16) * s2.pow(3)
}

/// `(u, v)` of the genus-2 complement on the stratum `s4 = 2s2²`.
pub fn uv_for_z23(s2: &Rational, s3: &Rational) -> Result<UVPoint> {
    let p = z23_p(s2, s3);
    if p.is_zero() {
        return Err(Error::PZero);
    }
    let r = Rational::from_int;
    let u_num = -r(9) * s3.square() + r(120) * s2 * s3 - r(400) * s2.square() + r(16) * s2.pow(3);
    let v_num = r(432) * s2 * s3.pow(3) - r(27) * s3.pow(4) - r(1440) * s2.square() * s3.square()
        - r(6400) * s2.pow(3) * s3
        + r(32000) * s2.pow(4)
        + r(288) * s2.pow(3) * s3.square()
        - r(5376) * s2.pow(4) * s3
        + r(23040) * s2.pow(5)
        + r(256) * s2.pow(6);
    let u = u_num / &p;
    let v = r(-2) * v_num / p.square();
    Ok(UVPoint { u, v })
}

/// `(9 − λ/256, 9·(6 − λ/256))`.
pub fn uv_from_j(lambda: &Rational) -> UVPoint {
    let t = lambda / Rational::from_int(256);
    let r = Rational::from_int;
    UVPoint { u: r(9) - &t, v: r(9) * (r(6) - t) }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IsomorphicSubfields {
    /// `v² − 4u³ = 0`
    pub cond_d8: bool,
    /// `v − 9u + 27 = 0`
    pub cond_line: bool,
    /// Discriminant of the uncorrected quadratic vanishes; `None` when its denominator does.
    pub disc_zero: Option<bool>,
}

pub fn isomorphic_subfields(p: &UVPoint) -> IsomorphicSubfields {
    let r = Rational::from_int;
    let (u, v) = (&p.u, &p.v);
    let cond_d8 = (v.square() - r(4) * u.pow(3)).is_zero();
    let cond_line = (v - r(9) * u + r(27)).is_zero();
    let disc_zero = j12_quadratic(p)
        .ok()
        .map(|(b, c)| (b.square() - r(4) * c).is_zero());
    IsomorphicSubfields { cond_d8, cond_line, disc_zero }
}

/// One line of the table comparing the uncorrected quadratic with the stated
/// isomorphic-subfields conditions.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiscrepancyRow {
    pub u: Rational,
    pub v: Rational,
    pub cond_line: bool,
    pub cond_d8: bool,
    pub uncorrected_b: Option<Rational>,
    pub uncorrected_c: Option<Rational>,
    pub uncorrected_discriminant: Option<Rational>,
    pub uncorrected_roots: Option<JPair>,
    pub corrected_discriminant: Option<Rational>,
    pub corrected_roots: Option<JPair>,
    /// Does the uncorrected quadratic's discriminant vanish exactly when a condition holds?
    pub uncorrected_consistent: Option<bool>,
    pub corrected_consistent: Option<bool>,
}

pub fn discrepancy_row(p: &UVPoint) -> DiscrepancyRow {
    let iso = isomorphic_subfields(p);
    let condition = iso.cond_d8 || iso.cond_line;
    let four = Rational::from_int(4);
    let uncorrected = j12_quadratic(p).ok();
    let corrected = j12_quadratic_corrected(p).ok();
    let uncorrected_disc = uncorrected.as_ref().map(|(b, c)| b.square() - &four * c);
    let corrected_disc = corrected.as_ref().map(|(b, c)| b.square() - &four * c);
    DiscrepancyRow {
        u: p.u.clone(),
        v: p.v.clone(),
        cond_line: iso.cond_line,
        cond_d8: iso.cond_d8,
        uncorrected_b: uncorrected.as_ref().map(|x| x.0.clone()),
        uncorrected_c: uncorrected.as_ref().map(|x| x.1.clone()),
        uncorrected_consistent: uncorrected_disc.as_ref().map(|d| d.is_zero() == condition),
        corrected_consistent: corrected_disc.as_ref().map(|d| d.is_zero() == condition),
        uncorrected_roots: uncorrected.as_ref().map(|(b, c)| quadratic_roots(b, c)),
        corrected_roots: corrected.as_ref().map(|(b, c)| quadratic_roots(b, c)),
        uncorrected_discriminant: uncorrected_disc,
        corrected_discriminant: corrected_disc,
    }
}

/// Points of the standard diagnostic: the worked example, three points of the
/// line `v = 9u − 27`, one point with `v² = 4u³` and the image of `λ = 1728`.
pub fn diagnostic_points() -> Vec<UVPoint> {
    let q = Rational::new;
    vec![
        UVPoint::new(q(9, 1), q(-754, 5)),
        UVPoint::new(q(8, 1), q(45, 1)),
        UVPoint::new(q(2, 1), q(-9, 1)),
        UVPoint::new(q(7, 1), q(36, 1)),
        UVPoint::new(q(1, 1), q(2, 1)),
        UVPoint::new(q(9, 4), q(-27, 4)),
        UVPoint::new(q(0, 1), q(1, 1)),
    ]
}
