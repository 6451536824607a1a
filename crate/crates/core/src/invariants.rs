//! Dihedral invariants, the D4 action on normal-form coefficients, both
//! discriminants, the absolute invariants of the genus-2 complement and
//! closed-form j-invariants of quartic and cubic models.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::curves::{EllipticKind, EllipticModel};
use crate::error::{Error, Result};
use crate::exact::{GaussianRational, Rational, TriPoly, DIHEDRAL_VARS};

/// The moduli coordinate `(s2, s3, s4)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct DihedralPoint {
    pub s2: Rational,
    pub s3: Rational,
    pub s4: Rational,
}

impl DihedralPoint {
    pub fn new(s2: Rational, s3: Rational, s4: Rational) -> Self {
        DihedralPoint { s2, s3, s4 }
    }

    pub fn from_ints(s2: i64, s3: i64, s4: i64) -> Self {
        DihedralPoint::new(s2.into(), s3.into(), s4.into())
    }

    pub fn coords(&self) -> [Rational; 3] {
        [self.s2.clone(), self.s3.clone(), self.s4.clone()]
    }

    /// All three coordinates vanish.
    pub fn is_degenerate(&self) -> bool {
        self.s2.is_zero() && self.s3.is_zero() && self.s4.is_zero()
    }

    /// `M = s4 + 2·s2²`.
    pub fn m(&self) -> Rational {
        &self.s4 + Rational::from_int(2) * self.s2.square()
    }

    /// `D = 16s2³ − 40s2² + 8s2s4 − 3s3² − 20s4`.
    pub fn d(&self) -> Rational {
        let s2 = &self.s2;
        Rational::from_int(16) * s2.pow(3) - Rational::from_int(40) * s2.square()
            + Rational::from_int(8) * s2 * &self.s4
            - Rational::from_int(3) * self.s3.square()
            - Rational::from_int(20) * &self.s4
    }
}

/// `(ac, (a²+c²)b, a⁴+c⁴)`.
pub fn dihedral_invariants(a: &Rational, b: &Rational, c: &Rational) -> DihedralPoint {
    let a2 = a.square();
    let c2 = c.square();
    DihedralPoint {
        s2: a * c,
        s3: (&a2 + &c2) * b,
        s4: a2.square() + c2.square(),
    }
}

/// `a = c = 0` with `b ≠ 0`: the invariants forget `b` on this fiber.
pub fn is_non_faithful(a: &Rational, b: &Rational, c: &Rational) -> bool {
    a.is_zero() && c.is_zero() && !b.is_zero()
}

/// Dihedral invariants over the Gaussian rationals.
pub fn dihedral_invariants_gaussian(
    a: &GaussianRational,
    b: &GaussianRational,
    c: &GaussianRational,
) -> [GaussianRational; 3] {
    let a2 = a * a;
    let c2 = c * c;
    [a * c, &(&a2 + &c2) * b, &(&a2 * &a2) + &(&c2 * &c2)]
}

/// `τ1(a, b, c) = (−i·a, −b, i·c)`.
pub fn tau1(t: &[GaussianRational; 3]) -> [GaussianRational; 3] {
    [-t[0].mul_i(), -&t[1], t[2].mul_i()]
}

/// `τ2(a, b, c) = (c, b, a)`.
pub fn tau2(t: &[GaussianRational; 3]) -> [GaussianRational; 3] {
    [t[2].clone(), t[1].clone(), t[0].clone()]
}

/// Images of `(a, b, c)` under the eight group elements `τ1^k` and `τ2·τ1^k`, `k = 0..3`.
pub fn d4_images(a: &GaussianRational, b: &GaussianRational, c: &GaussianRational) -> Vec<[GaussianRational; 3]> {
    let mut out = Vec::with_capacity(8);
    let mut t = [a.clone(), b.clone(), c.clone()];
    for _ in 0..4 {
        let swapped = tau2(&t);
        out.push(t.clone());
        out.push(swapped);
        t = tau1(&t);
    }
    out
}

/// Distinct elements of the orbit under the group generated by `τ1` and `τ2`,
/// in order of first appearance among [`d4_images`]. Its size divides 8.
pub fn d4_orbit(a: &GaussianRational, b: &GaussianRational, c: &GaussianRational) -> Vec<[GaussianRational; 3]> {
    let mut orbit: Vec<[GaussianRational; 3]> = Vec::with_capacity(8);
    for t in d4_images(a, b, c) {
        if !orbit.contains(&t) {
            orbit.push(t);
        }
    }
    orbit
}

const DELTA_S_TEXT: &str = "16*s2^7+24*s2^6-72*s3*s2^5+16*s4*s2^5+768*s2^5-1024*s2^4-2*s3^2*s2^4\
+132*s4*s2^4-576*s3*s2^4+768*s4*s2^3-72*s4*s3*s2^3+160*s3^2*s2^3+4*s4^2*s2^3-576*s4*s3*s2^2\
+8*s3^3*s2^2-1024*s4*s2^2-s3^2*s4*s2^2+256*s3^2*s2^2+114*s4^2*s2^2+192*s4^2*s2-18*s4^2*s3*s2\
+80*s3^2*s4*s2-256*s4^2+27*s4^3+128*s3^2*s4-16*s3^4-144*s4^2*s3+4*s3^3*s4";

const I1_BRACKET_TEXT: &str =
    "2*s2^4+2*s2^3-6*s2^2*s3+s2^2*s4-40*s2^2+s2*s4+9*s3^2-3*s3*s4-20*s4";

const I2_BRACKET_TEXT: &str = "8*s2^5+12*s2^4-36*s2^3*s3+4*s2^3*s4+1248*s2^3-558*s2^2*s3\
+114*s2^2*s4+81*s2*s3^2-18*s2*s3*s4-2240*s2^2+624*s2*s4+216*s3^2-279*s3*s4+54*s4^2-1120*s4";

const DELTA_ABC_INNER_TEXT: &str = "-256+80*b^2*a*c-18*b*a^3*c-18*a*c^3*b-b^2*a^2*c^2+6*a^2*c^2\
-144*c^2*b+4*a^3*c^3+4*b^3*a^2+4*b^3*c^2+128*b^2-144*b*a^2+192*a*c-16*b^4+27*c^4+27*a^4";

fn parse_static(cell: &'static OnceLock<TriPoly>, text: &str, vars: [&str; 3]) -> &'static TriPoly {
    cell.get_or_init(|| TriPoly::parse(text, vars).expect("built-in polynomial parses"))
}

/// The 28-term discriminant polynomial in the dihedral invariants. The same
/// polynomial is the bracket of `i3` and the long factor of `j_E`.
pub fn delta_s_poly() -> &'static TriPoly {
    static CELL: OnceLock<TriPoly> = OnceLock::new();
    parse_static(&CELL, DELTA_S_TEXT, DIHEDRAL_VARS)
}

pub fn i1_bracket_poly() -> &'static TriPoly {
    static CELL: OnceLock<TriPoly> = OnceLock::new();
    parse_static(&CELL, I1_BRACKET_TEXT, DIHEDRAL_VARS)
}

pub fn i2_bracket_poly() -> &'static TriPoly {
    static CELL: OnceLock<TriPoly> = OnceLock::new();
    parse_static(&CELL, I2_BRACKET_TEXT, DIHEDRAL_VARS)
}

/// Bracket whose square, times 256, is the discriminant in `(a, b, c)`.
pub fn delta_abc_inner_poly() -> &'static TriPoly {
    static CELL: OnceLock<TriPoly> = OnceLock::new();
    parse_static(&CELL, DELTA_ABC_INNER_TEXT, ["a", "b", "c"])
}

pub fn delta_s(p: &DihedralPoint) -> Rational {
    delta_s_poly().eval(&p.coords())
}

pub fn delta_abc_inner(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    delta_abc_inner_poly().eval(&[a.clone(), b.clone(), c.clone()])
}

/// `256·inner²`; equals the Sylvester discriminant of the octavic.
pub fn delta_abc(a: &Rational, b: &Rational, c: &Rational) -> Rational {
    Rational::from_int(256) * delta_abc_inner(a, b, c).square()
}

/// `(i1, i2, i3)` of the genus-2 complement.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AbsoluteInvariants2 {
    pub i1: Rational,
    pub i2: Rational,
    pub i3: Rational,
}

pub fn absolute_invariants(p: &DihedralPoint) -> Result<AbsoluteInvariants2> {
    let d = p.d();
    if d.is_zero() {
        return Err(Error::J2Vanishes);
    }
    let m = p.m();
    let x = p.coords();
    let i1 = Rational::from_int(144) * &m / d.pow(2) * i1_bracket_poly().eval(&x);
    let i2 = Rational::from_int(432) * m.pow(2) / d.pow(3) * i2_bracket_poly().eval(&x);
    let i3 = Rational::new(243, 16) * m.pow(3) / d.pow(5) * delta_s_poly().eval(&x);
    Ok(AbsoluteInvariants2 { i1, i2, i3 })
}

/// Classical invariants `(I, J)` of `a0·U⁴ + a1·U³ + a2·U² + a3·U + a4`.
pub fn quartic_ij(a: [&Rational; 5]) -> (Rational, Rational) {
    let [a0, a1, a2, a3, a4] = a;
    let r = Rational::from_int;
    let i = r(12) * a0 * a4 - r(3) * a1 * a3 + a2.square();
    let j = r(72) * a0 * a2 * a4 - r(27) * a0 * a3.square() - r(27) * a1.square() * a4
        + r(9) * a1 * a2 * a3
        - r(2) * a2.pow(3);
    (i, j)
}

/// `j = 1728·4I³/(4I³ − J²)` of `V² = quartic(U)`.
pub fn j_quartic(e: &EllipticModel) -> Result<Rational> {
    if e.kind != EllipticKind::Quartic {
        return Err(Error::WrongModelKind("quartic"));
    }
    let c = &e.coeffs;
    let (a0, a1, a2, a3, a4) = (c.coeff(4), c.coeff(3), c.coeff(2), c.coeff(1), c.coeff(0));
    let (i, j) = quartic_ij([&a0, &a1, &a2, &a3, &a4]);
    let four_i3 = Rational::from_int(4) * i.pow(3);
    let den = &four_i3 - j.square();
    if den.is_zero() {
        return Err(Error::SingularQuartic);
    }
    Ok(Rational::from_int(1728) * four_i3 / den)
}

/// `j = c4³/Δ` of `V² = cubic(U)` after moving to the monic model
/// `y² = x³ + a x² + b x + c`.
pub fn j_cubic(e: &EllipticModel) -> Result<Rational> {
    if e.kind != EllipticKind::Cubic {
        return Err(Error::WrongModelKind("cubic"));
    }
    let p = &e.coeffs;
    if p.degree() != Some(3) {
        return Err(Error::SingularCubic);
    }
    let lc = p.coeff(3);
    // (lc·y)² = (lc·x)³ + a2·(lc·x)² + a1·lc·(lc·x) + a0·lc²
    let a = p.coeff(2);
    let b = p.coeff(1) * &lc;
    let c = p.coeff(0) * lc.square();
    let r = Rational::from_int;
    let c4 = r(16) * (a.square() - r(3) * &b);
    let disc = a.square() * b.square() - r(4) * b.pow(3) - r(4) * a.pow(3) * &c + r(18) * &a * &b * &c
        - r(27) * c.square();
    let delta = r(16) * disc;
    if delta.is_zero() {
        return Err(Error::SingularCubic);
    }
    Ok(c4.pow(3) / delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, UniPoly};

    #[test]
    fn example_invariants() {
        let p = dihedral_invariants(&q(1, 1), &q(1, 1), &q(1, 1));
        assert_eq!(p, DihedralPoint::from_ints(1, 2, 2));
        assert_eq!(dihedral_invariants(&q(2, 1), &q(0, 1), &q(2, 1)), DihedralPoint::from_ints(4, 0, 32));
        assert_eq!(
            dihedral_invariants(&q(3, 1), &q(-1, 2), &q(5, 7)),
            dihedral_invariants(&q(5, 7), &q(-1, 2), &q(3, 1))
        );
    }

    #[test]
    fn non_faithful_fiber() {
        assert!(is_non_faithful(&q(0, 1), &q(3, 1), &q(0, 1)));
        assert!(!is_non_faithful(&q(0, 1), &q(0, 1), &q(0, 1)));
        assert!(dihedral_invariants(&q(0, 1), &q(3, 1), &q(0, 1)).is_degenerate());
    }

    #[test]
    fn bracket_polynomials_have_expected_shape() {
        assert_eq!(delta_s_poly().len(), 28);
        assert_eq!(delta_abc_inner_poly().len(), 16);
    }

    #[test]
    fn discriminant_values() {
        assert_eq!(delta_s(&DihedralPoint::from_ints(1, 2, 2)), q(-2000, 1));
        assert_eq!(delta_s(&DihedralPoint::from_ints(0, 0, 0)), q(0, 1));
        assert_eq!(delta_abc_inner(&q(1, 1), &q(1, 1), &q(1, 1)), q(-125, 1));
        assert_eq!(delta_abc(&q(1, 1), &q(1, 1), &q(1, 1)), q(4_000_000, 1));
        assert_eq!(delta_abc(&q(0, 1), &q(0, 1), &q(0, 1)), q(16_777_216, 1));
    }

    #[test]
    fn absolute_invariants_example() {
        let p = DihedralPoint::from_ints(1, 2, 2);
        assert_eq!(p.m(), q(4, 1));
        assert_eq!(p.d(), q(-60, 1));
        let i = absolute_invariants(&p).unwrap();
        assert_eq!((i.i1, i.i2, i.i3), (q(-48, 5), q(432, 5), q(1, 400)));
        let degenerate = DihedralPoint::new(q(5, 2), q(0, 1), q(7, 1));
        assert_eq!(absolute_invariants(&degenerate), Err(Error::J2Vanishes));
    }

    #[test]
    fn orbits() {
        let g = |x: i64| GaussianRational::real(q(x, 1));
        let o = d4_images(&g(1), &g(1), &g(1));
        assert_eq!(o.len(), 8);
        let i = GaussianRational::i();
        assert!(o.contains(&[-i.clone(), g(-1), i.clone()]));
        assert!(o.contains(&[g(1), g(1), g(1)]));
        // τ2 fixes (1, 1, 1), so only four images are distinct
        assert_eq!(d4_orbit(&g(1), &g(1), &g(1)).len(), 4);
        for t in &o {
            let s = dihedral_invariants_gaussian(&t[0], &t[1], &t[2]);
            assert_eq!(s, [g(1), g(2), g(2)]);
        }
        let small = d4_orbit(&g(0), &g(5), &g(0));
        assert_eq!(small, vec![[g(0), g(5), g(0)], [g(0), g(-5), g(0)]]);
        assert_eq!(d4_orbit(&g(1), &g(2), &g(3)).len(), 8);
    }

    #[test]
    fn quartic_and_cubic_j() {
        let quartic = |c: &[i64]| EllipticModel::quartic(UniPoly::from_ints(c)).unwrap();
        assert_eq!(j_quartic(&quartic(&[1, 1, 1, 1, 1])).unwrap(), q(2048, 1));
        assert_eq!(j_quartic(&quartic(&[1, 0, 0, 0, 1])).unwrap(), q(1728, 1));
        assert!(EllipticModel::quartic(UniPoly::from_ints(&[1, 0, -2, 0, 1])).is_err());

        let cubic = |c: &[i64]| EllipticModel::cubic(UniPoly::from_ints(c)).unwrap();
        assert_eq!(j_cubic(&cubic(&[0, -1, 0, 1])).unwrap(), q(1728, 1));
        assert_eq!(j_cubic(&cubic(&[-1, 0, 0, 1])).unwrap(), q(0, 1));
        assert_eq!(j_cubic(&cubic(&[1, 1, 1, 1])).unwrap(), q(128, 1));
        // same curve read as a quartic with a root at infinity
        let (i, j) = quartic_ij([&q(0, 1), &q(1, 1), &q(1, 1), &q(1, 1), &q(1, 1)]);
        assert_eq!((i.clone(), j.clone()), (q(-2, 1), q(-20, 1)));
        assert_eq!(j_quartic(&quartic(&[1, 1, 1, 1])).unwrap(), q(128, 1));
    }
}
