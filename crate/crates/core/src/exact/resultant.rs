use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Integer coefficients of `k·p` for the smallest positive `k`, plus `k`.
fn clear_denominators(p: &UniPoly) -> (Vec<BigInt>, BigInt) {
    let k = p.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&k / c.denom()))
        .collect();
    (ints, k)
}

/// Determinant of a square integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of `f` and `g`: `deg g` shifted rows of `f` (descending
/// coefficients) followed by `deg f` shifted rows of `g`.
fn sylvester(f: &[BigInt], g: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let m = g.len() - 1;
    let size = n + m;
    let mut rows = Vec::with_capacity(size);
    for shift in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    for shift in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.iter().rev().enumerate() {
            row[shift + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant as the determinant of the Sylvester matrix with the rows of `f`
/// first. With this convention `res(x − 1, x − 2) = −1`, which equals
/// `lc(f)^deg g · ∏ g(α)` over the roots `α` of `f`.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<Rational> {
    let (df, dg) = match (f.degree(), g.degree()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::ZeroPolynomial),
    };
    let (fi, kf) = clear_denominators(f);
    let (gi, kg) = clear_denominators(g);
    let det = bareiss_det(sylvester(&fi, &gi));
    // res(kf·f, kg·g) = kf^deg g · kg^deg f · res(f, g)
    let scale = num_traits::pow(kf, dg) * num_traits::pow(kg, df);
    Ok(Rational::from_bigints(det, scale).expect("nonzero scale"))
}

/// `(−1)^{n(n−1)/2} · res(f, f′) / lc(f)` for `n = deg f ≥ 2`.
pub fn discriminant(f: &UniPoly) -> Result<Rational> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooLow { need: 2, got: n });
    }
    let r = resultant(f, &f.derivative())?;
    let lc = f.leading().expect("nonzero polynomial");
    let v = r / lc;
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -v } else { v })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn sign_convention_linear() {
        assert_eq!(resultant(&p(&[-1, 1]), &p(&[-2, 1])).unwrap(), q(-1, 1));
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-1, 1])).unwrap(), q(1, 1));
    }

    #[test]
    fn shared_root_gives_zero() {
        assert_eq!(resultant(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), q(0, 1));
    }

    #[test]
    fn constants_and_zero() {
        assert_eq!(resultant(&p(&[0, 0, 1]), &p(&[3])).unwrap(), q(9, 1));
        assert_eq!(resultant(&p(&[5]), &p(&[3])).unwrap(), q(1, 1));
        assert_eq!(resultant(&p(&[1, 1]), &UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_coefficients_scale_correctly() {
        let f = UniPoly::new(vec![q(-1, 2), q(1, 1)]);
        let g = UniPoly::new(vec![q(0, 1), q(0, 1), q(1, 3)]);
        // lc(f)^2 · g(1/2) = 1/12
        assert_eq!(resultant(&f, &g).unwrap(), q(1, 12));
    }

    #[test]
    fn textbook_discriminants() {
        assert_eq!(discriminant(&p(&[1, 0, 1])).unwrap(), q(-4, 1));
        assert_eq!(discriminant(&p(&[1, -2, 1])).unwrap(), q(0, 1));
        // x^3 + px + q: -4p^3 - 27q^2
        assert_eq!(discriminant(&p(&[2, -3, 0, 1])).unwrap(), q(0, 1));
        assert_eq!(discriminant(&p(&[1, 1, 0, 1])).unwrap(), q(-31, 1));
        assert_eq!(discriminant(&p(&[1, 1])), Err(Error::DegreeTooLow { need: 2, got: 1 }));
        assert!(!discriminant(&p(&[1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap().is_zero());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m: Vec<Vec<BigInt>> = [[2, -1, 0], [1, 3, 4], [0, 5, -2]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        // first-row expansion: 2·(−26) + 1·(−2) = −54
        assert_eq!(bareiss_det(m), BigInt::from(-54));
    }
}
