//! Curve models: the even octavic, its two quotients and the genus-2 model
//! attached to a point `(u, v)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{discriminant, Rational, UniPoly};
use crate::invariants::{delta_abc, quartic_ij};

/// `Y² = X⁸ + aX⁶ + bX⁴ + cX² + 1` with nonzero discriminant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "model", rename = "genus3_even_octavic", try_from = "RawGenus3")]
pub struct Genus3Curve {
    a: Rational,
    b: Rational,
    c: Rational,
}

#[derive(Deserialize)]
#[serde(tag = "model", rename = "genus3_even_octavic")]
struct RawGenus3 {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl TryFrom<RawGenus3> for Genus3Curve {
    type Error = Error;
    fn try_from(r: RawGenus3) -> Result<Self> {
        make_genus3(r.a, r.b, r.c)
    }
}

/// Validates the discriminant and builds the curve.
pub fn make_genus3(a: Rational, b: Rational, c: Rational) -> Result<Genus3Curve> {
    if delta_abc(&a, &b, &c).is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(Genus3Curve { a, b, c })
}

impl Genus3Curve {
    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn coefficients(&self) -> [Rational; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    /// The octavic in `X`, ascending.
    pub fn octavic(&self) -> UniPoly {
        let z = Rational::zero;
        UniPoly::new(vec![
            Rational::one(),
            z(),
            self.c.clone(),
            z(),
            self.b.clone(),
            z(),
            self.a.clone(),
            z(),
            Rational::one(),
        ])
    }
}

/// `y² = sextic(x)` with sextic of degree 5 or 6 and distinct roots on the
/// projective line (a degree-5 model has a simple root at infinity).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(tag = "model", rename = "genus2_sextic", try_from = "RawGenus2")]
pub struct Genus2Curve {
    coeffs: UniPoly,
}

#[derive(Deserialize)]
#[serde(tag = "model", rename = "genus2_sextic")]
struct RawGenus2 {
    coeffs: UniPoly,
}

impl TryFrom<RawGenus2> for Genus2Curve {
    type Error = Error;
    fn try_from(r: RawGenus2) -> Result<Self> {
        Genus2Curve::new(r.coeffs)
    }
}

impl Genus2Curve {
    pub fn new(sextic: UniPoly) -> Result<Self> {
        let deg = sextic.degree().unwrap_or(0);
        if !(5..=6).contains(&deg) {
            return Err(Error::DegreeTooLow { need: 5, got: deg });
        }
        if discriminant(&sextic)?.is_zero() {
            return Err(Error::SingularSextic);
        }
        Ok(Genus2Curve { coeffs: sextic })
    }

    pub fn sextic(&self) -> &UniPoly {
        &self.coeffs
    }

    /// Coefficients `a0..a6` of the degree-6 homogenization, ascending.
    pub fn homogeneous_coeffs(&self) -> [Rational; 7] {
        std::array::from_fn(|i| self.coeffs.coeff(i))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EllipticKind {
    Quartic,
    Cubic,
}

/// `V² = quartic(U)` or `V² = cubic(U)` with distinct roots.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct EllipticModel {
    pub kind: EllipticKind,
    pub coeffs: UniPoly,
}

impl EllipticModel {
    /// Quartic model; degree 3 is allowed and read as a root at infinity.
    pub fn quartic(coeffs: UniPoly) -> Result<Self> {
        let deg = coeffs.degree().unwrap_or(0);
        if !(3..=4).contains(&deg) {
            return Err(Error::DegreeTooLow { need: 3, got: deg });
        }
        let c: Vec<Rational> = (0..5).rev().map(|i| coeffs.coeff(i)).collect();
        let (i, j) = quartic_ij([&c[0], &c[1], &c[2], &c[3], &c[4]]);
        if (Rational::from_int(4) * i.pow(3) - j.square()).is_zero() {
            return Err(Error::SingularQuartic);
        }
        Ok(EllipticModel { kind: EllipticKind::Quartic, coeffs })
    }

    pub fn cubic(coeffs: UniPoly) -> Result<Self> {
        if coeffs.degree() != Some(3) {
            return Err(Error::DegreeTooLow { need: 3, got: coeffs.degree().unwrap_or(0) });
        }
        if discriminant(&coeffs)?.is_zero() {
            return Err(Error::SingularCubic);
        }
        Ok(EllipticModel { kind: EllipticKind::Cubic, coeffs })
    }
}

/// The coordinate `(u, v)` of a genus-2 curve with an extra involution.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct UVPoint {
    pub u: Rational,
    pub v: Rational,
}

impl UVPoint {
    pub fn new(u: Rational, v: Rational) -> Self {
        UVPoint { u, v }
    }
}

/// Quotients by `U = X²` and by `(x, y) = (X², YX)`:
/// `V² = U⁴ + aU³ + bU² + cU + 1` and `y² = x(x⁴ + ax³ + bx² + cx + 1)`.
pub fn subcovers(x: &Genus3Curve) -> (EllipticModel, Genus2Curve) {
    let [a, b, c] = x.coefficients();
    let one = Rational::one();
    let quartic = UniPoly::new(vec![one.clone(), c.clone(), b.clone(), a.clone(), one.clone()]);
    let quintic = UniPoly::new(vec![Rational::zero(), one.clone(), c, b, a, one]);
    // A nonzero octavic discriminant makes both quotients nonsingular.
    let e = EllipticModel { kind: EllipticKind::Quartic, coeffs: quartic };
    let g = Genus2Curve { coeffs: quintic };
    (e, g)
}

/// `(u² − 4v + 18u − 27)(v² − 4u³)(4v − u² + 110u − 1125)`.
pub fn uv_gate(p: &UVPoint) -> Rational {
    let (u, v) = (&p.u, &p.v);
    let r = Rational::from_int;
    let f1 = u.square() - r(4) * v + r(18) * u - r(27);
    let f2 = v.square() - r(4) * u.pow(3);
    let f3 = r(4) * v - u.square() + r(110) * u - r(1125);
    f1 * f2 * f3
}

/// Genus-2 model `a0x⁶ + a1x⁵ + a2x⁴ + a3x³ + t·a2x² + t²·a1x + t³·a0` of the
/// moduli point `(u, v)`.
pub fn genus2_from_uv(p: &UVPoint) -> Result<Genus2Curve> {
    let r = Rational::from_int;
    let (u, v) = (&p.u, &p.v);
    if (u.square() - r(4) * v + r(18) * u - r(27)).is_zero() {
        return Err(Error::DegenerateUv("u^2 - 4v + 18u - 27 = 0"));
    }
    if (v.square() - r(4) * u.pow(3)).is_zero() {
        return Err(Error::DegenerateUv("v^2 - 4u^3 = 0"));
    }
    if (r(4) * v - u.square() + r(110) * u - r(1125)).is_zero() {
        return Err(Error::DegenerateUv("4v - u^2 + 110u - 1125 = 0"));
    }
    let (t, a0, a1, a2, a3) = if u.is_zero() {
        (
            r(1),
            r(1) + r(2) * v,
            r(2) * (r(3) - r(4) * v),
            r(15) + r(14) * v,
            r(4) * (r(5) - r(4) * v),
        )
    } else {
        let t = v.square() - r(4) * u.pow(3);
        let a0 = v.square() + u.square() * v - r(2) * u.pow(3);
        let a1 = r(2) * (u.square() + r(3) * v) * &t;
        let a2 = (r(15) * v.square() - u.square() * v - r(30) * u.pow(3)) * &t;
        let a3 = r(4) * (r(5) * v - u.square()) * t.square();
        (t, a0, a1, a2, a3)
    };
    let sextic = UniPoly::new(vec![
        t.pow(3) * &a0,
        t.square() * &a1,
        &t * &a2,
        a3,
        a2,
        a1,
        a0,
    ]);
    Genus2Curve::new(sextic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn construction_gates() {
        assert!(make_genus3(q(1, 1), q(1, 1), q(1, 1)).is_ok());
        assert_eq!(make_genus3(q(1, 1), q(0, 1), q(1, 1)), Err(Error::SingularCurve));
        assert!(make_genus3(q(0, 1), q(0, 1), q(0, 1)).is_ok());
    }

    #[test]
    fn subcover_models() {
        let x = make_genus3(q(1, 1), q(0, 1), q(-1, 1)).unwrap();
        let (e, c) = subcovers(&x);
        assert_eq!(e.coeffs, UniPoly::from_ints(&[1, -1, 0, 1, 1]));
        assert_eq!(c.sextic(), &UniPoly::from_ints(&[0, 1, -1, 0, 1, 1]));
        assert!(!discriminant(c.sextic()).unwrap().is_zero());
    }

    #[test]
    fn uv_reconstruction() {
        let c = genus2_from_uv(&UVPoint::new(q(0, 1), q(1, 1))).unwrap();
        assert_eq!(c.sextic(), &UniPoly::from_ints(&[3, -2, 29, 4, 29, -2, 3]));
        assert_eq!(
            genus2_from_uv(&UVPoint::new(q(0, 1), q(0, 1))),
            Err(Error::DegenerateUv("v^2 - 4u^3 = 0"))
        );
        let p = UVPoint::new(q(9, 1), q(-754, 5));
        let c = genus2_from_uv(&p).unwrap();
        // leading a0 times t^3 sits in the constant slot
        let t = q(495616, 25);
        assert_eq!(p.v.square() - Rational::from_int(4) * p.u.pow(3), t);
        assert_eq!(c.sextic().coeff(0), t.pow(3) * c.sextic().coeff(6));
    }

    #[test]
    fn json_shapes() {
        let x = make_genus3(q(1, 1), q(1, 1), q(1, 1)).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"model":"genus3_even_octavic","a":"1","b":"1","c":"1"}"#);
        let back: Genus3Curve = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Genus3Curve>(r#"{"model":"genus3_even_octavic","a":"1","b":"0","c":"1"}"#).is_err());

        let (_, c) = subcovers(&x);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"model":"genus2_sextic","coeffs":["0","1","1","1","1","1"]}"#);
        let back: Genus2Curve = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }
}
