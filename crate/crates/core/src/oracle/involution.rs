//! Search for a Möbius involution permuting the six branch points.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::mp::{to_f64, Cx, Fl};
use super::roots::roots_cx;
use super::{CxValue, OracleConfig};
use crate::curves::Genus2Curve;
use crate::error::{Error, Result};

/// A point `(x : z)` of the projective line.
#[derive(Clone, Debug)]
pub struct HomPoint {
    pub x: Cx,
    pub z: Cx,
}

impl HomPoint {
    pub fn is_infinity(&self) -> bool {
        self.z.is_zero()
    }

    fn norm(&self) -> Fl {
        (self.x.norm_sqr() + self.z.norm_sqr()).sqrt()
    }
}

/// Chordal distance on the projective line.
pub(crate) fn chordal(p: &HomPoint, q: &HomPoint) -> f64 {
    let num = (&(&p.x * &q.z) - &(&q.x * &p.z)).abs();
    let den = p.norm() * q.norm();
    if den == Fl::ZERO {
        return f64::INFINITY;
    }
    to_f64(&(num / den))
}

/// The six branch points of `y² = f(x)`; a degree-5 `f` contributes `∞`.
pub fn sextic_points(coeffs: &[Cx], cfg: &OracleConfig) -> Result<Vec<HomPoint>> {
    let mut deg = coeffs.len().saturating_sub(1);
    while deg > 0 && coeffs[deg].is_zero() {
        deg -= 1;
    }
    if !(5..=6).contains(&deg) {
        return Err(Error::DegreeTooLow { need: 5, got: deg });
    }
    let r = roots_cx(&coeffs[..=deg], cfg)?;
    let bits = r[0].value().precision();
    let mut pts: Vec<HomPoint> = r.into_iter().map(|z| HomPoint { x: z.value().clone(), z: Cx::one(bits) }).collect();
    if deg == 5 {
        pts.push(HomPoint { x: Cx::one(bits), z: Cx::zero(bits) });
    }
    Ok(pts)
}

/// `x ↦ (αx + β)/(γx + δ)` with `δ = −α`, plus the root pairing it realises.
#[derive(Clone, Debug)]
pub struct InvolutionWitness {
    pub alpha: Cx,
    pub beta: Cx,
    pub gamma: Cx,
    pub delta: Cx,
    pub pairing: [(usize, usize); 3],
    /// Largest chordal distance between an image and its partner.
    pub residual: f64,
    pub(crate) points: Vec<HomPoint>,
}

impl InvolutionWitness {
    pub fn apply(&self, p: &HomPoint) -> HomPoint {
        HomPoint {
            x: &(&self.alpha * &p.x) + &(&self.beta * &p.z),
            z: &(&self.gamma * &p.x) + &(&self.delta * &p.z),
        }
    }

    pub fn points(&self) -> &[HomPoint] {
        &self.points
    }

    /// Distance of the square of the map from the identity, as a matrix
    /// proportional to `I`.
    pub fn involution_defect(&self) -> f64 {
        let m11 = &(&self.alpha * &self.alpha) + &(&self.beta * &self.gamma);
        let m12 = &(&self.alpha * &self.beta) + &(&self.beta * &self.delta);
        let m21 = &(&self.gamma * &self.alpha) + &(&self.delta * &self.gamma);
        let m22 = &(&self.gamma * &self.beta) + &(&self.delta * &self.delta);
        let off = m12.abs_f64().max(m21.abs_f64()) + (&m11 - &m22).abs_f64();
        off / m11.abs_f64().max(m22.abs_f64())
    }
}

impl Serialize for InvolutionWitness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("InvolutionWitness", 6)?;
        st.serialize_field("alpha", &CxValue::from(&self.alpha))?;
        st.serialize_field("beta", &CxValue::from(&self.beta))?;
        st.serialize_field("gamma", &CxValue::from(&self.gamma))?;
        st.serialize_field("delta", &CxValue::from(&self.delta))?;
        st.serialize_field("pairing", &self.pairing)?;
        st.serialize_field("residual", &self.residual)?;
        st.end()
    }
}

/// All 15 ways to split `0..6` into three pairs, in a fixed order.
pub(crate) fn pairings() -> Vec<[(usize, usize); 3]> {
    let mut out = Vec::with_capacity(15);
    for b in 1..6 {
        let rest: Vec<usize> = (1..6).filter(|&i| i != b).collect();
        for k in 1..4 {
            let (c, d) = (rest[0], rest[k]);
            let tail: Vec<usize> = rest[1..].iter().copied().filter(|&i| i != d).collect();
            out.push([(0, b), (c, d), (tail[0], tail[1])]);
        }
    }
    out
}

/// Linear condition on `(α, β, γ)` for the map to swap `p` and `q`.
fn row(p: &HomPoint, q: &HomPoint) -> [Cx; 3] {
    [&(&p.x * &q.z) + &(&q.x * &p.z), &p.z * &q.z, -(&p.x * &q.x)]
}

fn cross(u: &[Cx; 3], v: &[Cx; 3]) -> [Cx; 3] {
    [
        &(&u[1] * &v[2]) - &(&u[2] * &v[1]),
        &(&u[2] * &v[0]) - &(&u[0] * &v[2]),
        &(&u[0] * &v[1]) - &(&u[1] * &v[0]),
    ]
}

fn max_abs(v: &[Cx]) -> Fl {
    v.iter().map(Cx::max_abs).fold(Fl::ZERO, |a, b| if b > a { b } else { a })
}

/// Best-residual involution for a given set of six branch points, if any
/// pairing is realised by a nondegenerate Möbius involution.
pub(crate) fn best_involution(points: &[HomPoint]) -> Option<InvolutionWitness> {
    let mut best: Option<InvolutionWitness> = None;
    for pairing in pairings() {
        let [(a, b), (c, d), _] = pairing;
        let (r1, r2) = (row(&points[a], &points[b]), row(&points[c], &points[d]));
        let n = cross(&r1, &r2);
        let nn = max_abs(&n);
        let scale = max_abs(&r1) * max_abs(&r2);
        if nn == Fl::ZERO || to_f64(&(&nn / &scale)) < 1e-30 {
            continue;
        }
        let n: Vec<Cx> = n.iter().map(|x| x.scale(&(Fl::ONE / &nn))).collect();
        let (alpha, beta, gamma) = (n[0].clone(), n[1].clone(), n[2].clone());
        let det = &(&alpha * &alpha) + &(&beta * &gamma);
        if det.abs_f64() < 1e-20 {
            continue;
        }
        let delta = -&alpha;
        let mut w = InvolutionWitness { alpha, beta, gamma, delta, pairing, residual: 0.0, points: Vec::new() };
        let mut res: f64 = 0.0;
        for &(i, j) in &pairing {
            res = res.max(chordal(&w.apply(&points[i]), &points[j]));
            res = res.max(chordal(&w.apply(&points[j]), &points[i]));
        }
        w.residual = res;
        if best.as_ref().is_none_or(|b| res < b.residual) {
            best = Some(w);
        }
    }
    best.map(|mut w| {
        w.points = points.to_vec();
        w
    })
}

/// Looks for an extra involution with pairing residual below
/// `cfg.involution_tolerance`.
pub fn detect_involution(c: &Genus2Curve, cfg: &OracleConfig) -> Result<Option<InvolutionWitness>> {
    let bits = cfg.precision_bits;
    let coeffs: Vec<Cx> = c.homogeneous_coeffs().iter().map(|r| Cx::from_rational(r, bits)).collect();
    detect_involution_cx(&coeffs, cfg)
}

pub fn detect_involution_cx(coeffs: &[Cx], cfg: &OracleConfig) -> Result<Option<InvolutionWitness>> {
    let pts = sextic_points(coeffs, cfg)?;
    Ok(best_involution(&pts).filter(|w| w.residual < cfg.involution_tolerance))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::genus2_from_uv;
    use crate::curves::UVPoint;
    use crate::exact::{q, UniPoly};

    #[test]
    fn fifteen_pairings() {
        let p = pairings();
        assert_eq!(p.len(), 15);
        let mut seen = std::collections::BTreeSet::new();
        for x in &p {
            let mut flat: Vec<usize> = x.iter().flat_map(|&(a, b)| [a, b]).collect();
            flat.sort();
            assert_eq!(flat, vec![0, 1, 2, 3, 4, 5]);
            let mut key: Vec<(usize, usize)> = x.to_vec();
            key.sort();
            seen.insert(key);
        }
        assert_eq!(seen.len(), 15);
    }

    #[test]
    fn even_sextic_has_x_to_minus_x() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 3, 0, 2, 0, 1])).unwrap();
        let w = detect_involution(&c, &OracleConfig::default()).unwrap().unwrap();
        assert!(w.residual < 1e-30);
        assert!(w.beta.abs_f64() < 1e-30 && w.gamma.abs_f64() < 1e-30);
        assert!(w.involution_defect() < 1e-30);
    }

    #[test]
    fn example_quotient_has_involution() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[0, 1, 1, 1, 1, 1])).unwrap();
        let w = detect_involution(&c, &OracleConfig::default()).unwrap().unwrap();
        assert!(w.residual < 1e-30);
        for &(i, j) in &w.pairing {
            assert!(chordal(&w.apply(&w.points()[i]), &w.points()[j]) < 1e-30);
        }
    }

    #[test]
    fn generic_sextic_has_none() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, -2, 5, 1, 0, 3, 7])).unwrap();
        assert!(detect_involution(&c, &OracleConfig::default()).unwrap().is_none());
    }

    #[test]
    fn reconstructed_curves_carry_one() {
        for (u, v) in [(q(0, 1), q(1, 1)), (q(3, 1), q(-7, 2)), (q(-11, 3), q(17, 1))] {
            let c = genus2_from_uv(&UVPoint::new(u, v)).unwrap();
            let w = detect_involution(&c, &OracleConfig::default()).unwrap();
            assert!(w.is_some());
        }
    }
}
