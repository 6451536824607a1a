//! Numeric curves attached to points given by approximate invariants.

use super::mp::{fl_int, Cx};
use crate::error::{Error, Result};
use crate::exact::TriPoly;

/// Some `(a, b, c)` with `𝔰(a, b, c) = s`, for complex `s`. Fails when
/// `𝔰₄ + 2𝔰₂² = 0`, where `a² + c²` vanishes and `b` is not determined.
pub fn curve_from_s_numeric(s: &[Cx; 3]) -> Result<[Cx; 3]> {
    let bits = s[0].precision().max(s[1].precision()).max(s[2].precision());
    let k = |n: i64| Cx::from_real(fl_int(n, bits), bits);
    let [s2, s3, s4] = s;
    let big_m = s4 + &(&k(2) * &s2.square());
    let scale = s4.abs_f64().max(s2.square().abs_f64()).max(1.0);
    if big_m.abs_f64() < 1e-24 * scale {
        return Err(Error::DegenerateTransform("s4 + 2*s2^2 = 0"));
    }
    let m = big_m.sqrt();
    // a², c² are the roots of z² − m z + s2².
    let r = (&m.square() - &(&k(4) * &s2.square())).sqrt();
    let two = k(2);
    let (p, q) = ((&m + &r).div(&two), (&m - &r).div(&two));
    let a2 = if p.norm_sqr() >= q.norm_sqr() { p } else { q };
    let a = a2.sqrt();
    let c = s2.div(&a);
    let b = s3.div(&m);
    Ok([a, b, c])
}

/// `x(x⁴ + a x³ + b x² + c x + 1)`, ascending.
pub fn subcover_sextic_cx(abc: &[Cx; 3]) -> Vec<Cx> {
    let bits = abc[0].precision();
    let [a, b, c] = abc;
    vec![Cx::zero(bits), Cx::one(bits), c.clone(), b.clone(), a.clone(), Cx::one(bits)]
}

/// Coefficients (ascending) in variable `var` of `poly` with the other two
/// variables set to the corresponding entries of `at`.
pub fn specialize_cx(poly: &TriPoly, var: usize, at: &[Cx; 3]) -> Vec<Cx> {
    let bits = at.iter().map(Cx::precision).max().unwrap_or(64);
    let mut out = vec![Cx::zero(bits); poly.degrees()[var] as usize + 1];
    for (m, c) in poly.terms() {
        let mut v = Cx::from_rational(c, bits);
        for i in (0..3).filter(|&i| i != var) {
            v = &v * &at[i].powu(m.0[i]);
        }
        let e = m.0[var] as usize;
        out[e] = &out[e] + &v;
    }
    out
}

/// `poly(at)` together with `Σ|c|·|at^m|`, the scale for relative tests.
pub fn eval_tripoly_cx(poly: &TriPoly, at: &[Cx; 3]) -> (Cx, f64) {
    let bits = at.iter().map(Cx::precision).max().unwrap_or(64);
    let mut acc = Cx::zero(bits);
    let mut scale = 0.0;
    for (m, c) in poly.terms() {
        let mut v = Cx::from_rational(c, bits);
        for (x, e) in at.iter().zip(m.0) {
            v = &v * &x.powu(e);
        }
        scale += v.abs_f64();
        acc = &acc + &v;
    }
    (acc, scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::invariants::dihedral_invariants;

    #[test]
    fn recovers_the_invariants() {
        let bits = 128;
        let (a, b, c) = (q(1, 1), q(2, 1), q(3, 1));
        let s = dihedral_invariants(&a, &b, &c).coords();
        let sc = [0, 1, 2].map(|i| Cx::from_rational(&s[i], bits));
        let [a, b, c] = curve_from_s_numeric(&sc).unwrap();
        let s2 = &a * &c;
        let s3 = &(&a.square() + &c.square()) * &b;
        let s4 = &a.powu(4) + &c.powu(4);
        for (x, y) in [(s2, &sc[0]), (s3, &sc[1]), (s4, &sc[2])] {
            assert!((&x - y).abs_f64() < 1e-30);
        }
    }

    #[test]
    fn specialization_matches_exact() {
        let p = TriPoly::parse("s2^2*s4 - 3*s3*s4^2 + 5", crate::exact::DIHEDRAL_VARS).unwrap();
        let at = [q(2, 1), q(-1, 3), q(0, 1)];
        let exact = p.specialize(2, &at);
        let num = specialize_cx(&p, 2, &at.clone().map(|r| Cx::from_rational(&r, 128)));
        for (i, c) in num.iter().enumerate() {
            assert!((c.to_f64().0 - exact.coeff(i).to_f64()).abs() < 1e-25);
        }
    }
}
