use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::rational::Rational;

/// Trial-division bound used when pulling square factors out of a radicand.
pub const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

/// `rat + coeff·√radicand` over the rationals.
///
/// Normalized form: the radicand is an integer with no square factor below
/// [`TRIAL_DIVISION_LIMIT`] and is never a perfect square; `coeff = 0`
/// exactly when `radicand = 0`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadExtValue {
    pub rat: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

/// Splits `n = k²·m`, returning `(k, m)`; `m` keeps the sign of `n`.
fn extract_square(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let mut rest = n.abs();
    let mut k = BigInt::one();
    let mut m = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut p: u64 = 2;
    while p <= TRIAL_DIVISION_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            e += 1;
        }
        k *= pb.pow(e / 2);
        if e % 2 == 1 {
            m *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        k *= r;
    } else {
        m *= rest;
    }
    (k, m)
}

impl QuadExtValue {
    /// Builds and normalizes `rat + coeff·√radicand`.
    pub fn new(rat: Rational, coeff: Rational, radicand: Rational) -> Self {
        if coeff.is_zero() || radicand.is_zero() {
            return QuadExtValue::rational(rat);
        }
        // √(n/d) = √(n·d)/d
        let nd = radicand.numer() * radicand.denom();
        let (k, m) = extract_square(&nd);
        let scale = Rational::from_bigints(k, radicand.denom().clone()).expect("positive denominator");
        let coeff = coeff * scale;
        if m.is_one() {
            return QuadExtValue::rational(rat + coeff);
        }
        QuadExtValue { rat, coeff, radicand: Rational::from(m) }
    }

    pub fn rational(r: Rational) -> Self {
        QuadExtValue { rat: r, coeff: Rational::zero(), radicand: Rational::zero() }
    }

    /// `√r`, normalized.
    pub fn sqrt(r: &Rational) -> Self {
        QuadExtValue::new(Rational::zero(), Rational::one(), r.clone())
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coeff.is_zero()
    }

    /// `rat − coeff·√radicand`.
    pub fn conj(&self) -> Self {
        QuadExtValue { rat: self.rat.clone(), coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    /// `rat² − coeff²·radicand`, the product with the conjugate.
    pub fn norm(&self) -> Rational {
        self.rat.square() - self.coeff.square() * &self.radicand
    }

    /// `rat + rat'` etc.; `None` when both carry different radicands.
    fn common_radicand(&self, other: &Self) -> Option<Rational> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Some(Rational::zero()),
            (true, false) => Some(other.radicand.clone()),
            (false, true) => Some(self.radicand.clone()),
            (false, false) if self.radicand == other.radicand => Some(self.radicand.clone()),
            _ => None,
        }
    }

    pub fn checked_add(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        Some(QuadExtValue::new(&self.rat + &other.rat, &self.coeff + &other.coeff, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        let d = self.common_radicand(other)?;
        let rat = &self.rat * &other.rat + &self.coeff * &other.coeff * &d;
        let coeff = &self.rat * &other.coeff + &self.coeff * &other.rat;
        Some(QuadExtValue::new(rat, coeff, d))
    }

    /// Division through the conjugate; `None` on a zero divisor or mismatched radicands.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let n = other.norm();
        if n.is_zero() {
            return None;
        }
        let num = self.checked_mul(&other.conj())?;
        Some(QuadExtValue::new(&num.rat / &n, &num.coeff / &n, num.radicand))
    }

    pub fn neg(&self) -> Self {
        QuadExtValue { rat: -&self.rat, coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    /// Real value, or the real part when the radicand is negative.
    pub fn to_f64(&self) -> f64 {
        let (re, _) = self.to_complex_f64();
        re
    }

    pub fn to_complex_f64(&self) -> (f64, f64) {
        let r = self.rat.to_f64();
        if self.is_rational() {
            return (r, 0.0);
        }
        let c = self.coeff.to_f64();
        let d = self.radicand.to_f64();
        if d >= 0.0 {
            (r + c * d.sqrt(), 0.0)
        } else {
            (r, c * (-d).sqrt())
        }
    }

    /// Radicand as `u64` when it fits, for display helpers.
    pub fn radicand_u64(&self) -> Option<u64> {
        self.radicand.numer().to_u64()
    }
}

impl fmt::Display for QuadExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rat);
        }
        let sign = if self.coeff.is_negative() { "-" } else { "+" };
        let c = self.coeff.abs();
        if self.rat.is_zero() {
            let lead = if self.coeff.is_negative() { "-" } else { "" };
            if c.is_one() {
                write!(f, "{lead}sqrt({})", self.radicand)
            } else {
                write!(f, "{lead}{c}*sqrt({})", self.radicand)
            }
        } else if c.is_one() {
            write!(f, "{} {sign} sqrt({})", self.rat, self.radicand)
        } else {
            write!(f, "{} {sign} {c}*sqrt({})", self.rat, self.radicand)
        }
    }
}

impl fmt::Debug for QuadExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    #[test]
    fn normalizes_square_factors() {
        let v = QuadExtValue::new(q(0, 1), q(1, 2), q(4294961296, 25));
        assert_eq!(v.coeff, q(2, 5));
        assert_eq!(v.radicand, q(268435081, 1));

        let w = QuadExtValue::sqrt(&q(12, 1));
        assert_eq!((w.coeff.clone(), w.radicand.clone()), (q(2, 1), q(3, 1)));

        let half = QuadExtValue::sqrt(&q(1, 2));
        assert_eq!((half.coeff.clone(), half.radicand.clone()), (q(1, 2), q(2, 1)));
    }

    #[test]
    fn perfect_squares_collapse() {
        let v = QuadExtValue::new(q(1, 1), q(3, 1), q(9, 4));
        assert!(v.is_rational());
        assert_eq!(v.rat, q(11, 2));
        assert_eq!(v.radicand, q(0, 1));
    }

    #[test]
    fn negative_radicand_allowed() {
        let v = QuadExtValue::sqrt(&q(-8, 1));
        assert_eq!((v.coeff.clone(), v.radicand.clone()), (q(2, 1), q(-2, 1)));
        assert_eq!(v.checked_mul(&v).unwrap(), QuadExtValue::rational(q(-8, 1)));
    }

    #[test]
    fn odd_prime_powers() {
        // 2^3 * 3^5 * 7 = 13608 = (2*9)^2 * 42
        let v = QuadExtValue::sqrt(&q(13608, 1));
        assert_eq!((v.coeff.clone(), v.radicand.clone()), (q(18, 1), q(42, 1)));
    }

    #[test]
    fn arithmetic_with_mismatched_radicands_is_refused() {
        let a = QuadExtValue::sqrt(&q(2, 1));
        let b = QuadExtValue::sqrt(&q(3, 1));
        assert!(a.checked_add(&b).is_none());
        let r = QuadExtValue::rational(q(5, 1));
        assert_eq!(a.checked_add(&r).unwrap().rat, q(5, 1));
    }

    #[test]
    fn division_and_json() {
        let a = QuadExtValue::new(q(1, 1), q(1, 1), q(5, 1));
        let one = a.checked_div(&a).unwrap();
        assert_eq!(one, QuadExtValue::rational(q(1, 1)));
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"rat":"1","coeff":"1","radicand":"5"}"#);
        assert_eq!(a.to_string(), "1 + sqrt(5)");
    }
}
