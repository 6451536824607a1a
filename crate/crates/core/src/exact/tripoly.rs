use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::rational::Rational;
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Default variable names, matching the dihedral coordinates.
pub const DIHEDRAL_VARS: [&str; 3] = ["s2", "s3", "s4"];

/// Exponent triple. Ordered graded-lex: larger total degree first, then
/// lexicographically larger exponents first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in three variables with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl TriPoly {
    pub fn zero() -> Self {
        TriPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = TriPoly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    /// The variable with index `i` (0, 1 or 2).
    pub fn var(i: usize) -> Self {
        let mut e = [0u32; 3];
        e[i] = 1;
        let mut p = TriPoly::zero();
        p.add_term(e, Rational::one());
        p
    }

    /// Builds from integer-coefficient terms; duplicates are summed.
    pub fn from_terms(terms: &[([u32; 3], i64)]) -> Self {
        let mut p = TriPoly::zero();
        for (e, c) in terms {
            p.add_term(*e, Rational::from_int(*c));
        }
        p
    }

    pub fn add_term(&mut self, e: [u32; 3], c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(e);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: [u32; 3]) -> Rational {
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Maximum exponent of each variable.
    pub fn degrees(&self) -> [u32; 3] {
        let mut d = [0u32; 3];
        for m in self.terms.keys() {
            for (d, e) in d.iter_mut().zip(m.0) {
                *d = (*d).max(e);
            }
        }
        d
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Exact value at a rational point.
    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let d = self.degrees();
        let powers: Vec<Vec<Rational>> = (0..3)
            .map(|i| {
                let mut v = Vec::with_capacity(d[i] as usize + 1);
                v.push(Rational::one());
                for k in 1..=d[i] as usize {
                    let next = &v[k - 1] * &x[i];
                    v.push(next);
                }
                v
            })
            .collect();
        self.terms
            .iter()
            .map(|(m, c)| {
                c * &powers[0][m.0[0] as usize] * &powers[1][m.0[1] as usize] * &powers[2][m.0[2] as usize]
            })
            .sum()
    }

    /// Floating-point evaluation, for numeric scans.
    pub fn eval_f64(&self, x: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                c.to_f64() * x[0].powi(m.0[0] as i32) * x[1].powi(m.0[1] as i32) * x[2].powi(m.0[2] as i32)
            })
            .sum()
    }

    /// Univariate polynomial in variable `var`, the other two fixed at the
    /// corresponding entries of `at` (the entry at `var` is ignored).
    pub fn specialize(&self, var: usize, at: &[Rational; 3]) -> UniPoly {
        let mut coeffs = vec![Rational::zero(); self.degrees()[var] as usize + 1];
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for i in (0..3).filter(|&i| i != var) {
                v = v * at[i].pow(m.0[i] as i32);
            }
            coeffs[m.0[var] as usize] += v;
        }
        UniPoly::new(coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.0, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        TriPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(m.0, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = [ma.0[0] + mb.0[0], ma.0[1] + mb.0[1], ma.0[2] + mb.0[2]];
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TriPoly::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes a polynomial for each variable.
    pub fn compose(&self, subs: &[TriPoly; 3]) -> Self {
        let d = self.degrees();
        let powers: Vec<Vec<TriPoly>> = (0..3)
            .map(|i| {
                let mut v = vec![TriPoly::constant(Rational::one())];
                for k in 1..=d[i] as usize {
                    let next = v[k - 1].mul(&subs[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = TriPoly::zero();
        for (m, c) in &self.terms {
            let t = powers[0][m.0[0] as usize]
                .mul(&powers[1][m.0[1] as usize])
                .mul(&powers[2][m.0[2] as usize])
                .scale(c);
            out = out.add(&t);
        }
        out
    }

    /// Parses a sum of terms such as `16*s2^7 - s3^2*s4 + 3/2`, with the given variable names.
    pub fn parse(src: &str, vars: [&str; 3]) -> Result<Self> {
        let cleaned: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = TriPoly::zero();
        let bytes = cleaned.as_bytes();
        let mut start = 0;
        let mut i = 0;
        let mut terms = Vec::new();
        while i <= bytes.len() {
            let at_split = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start);
            if at_split {
                terms.push(&cleaned[start..i]);
                start = i;
            }
            i += 1;
        }
        for t in terms {
            let (sign, body) = match t.as_bytes()[0] {
                b'-' => (-1, &t[1..]),
                b'+' => (1, &t[1..]),
                _ => (1, t),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {t:?}")));
            }
            let mut coeff = Rational::from_int(sign);
            let mut e = [0u32; 3];
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, x)) => {
                        let x: u32 = x.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                        (b, x)
                    }
                    None => (factor, 1),
                };
                if let Some(idx) = vars.iter().position(|v| *v == base) {
                    e[idx] += exp;
                } else {
                    let c: Rational = base
                        .parse()
                        .map_err(|_| Error::Parse(format!("unknown factor {factor:?}")))?;
                    coeff = coeff * c.pow(exp as i32);
                }
            }
            p.add_term(e, coeff);
        }
        Ok(p)
    }

    /// Canonical text: graded-lex order, explicit `*` and `^`, no spaces.
    pub fn to_canonical_string(&self, vars: [&str; 3]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if neg {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let a = c.abs();
            let mut factors = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(a.to_string());
            }
            for (var, e) in vars.iter().zip(m.0) {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    x => factors.push(format!("{}^{}", var, x)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Hex SHA-256 of the canonical string.
    pub fn sha256(&self, vars: [&str; 3]) -> String {
        let digest = Sha256::digest(self.to_canonical_string(vars).as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string(DIHEDRAL_VARS))
    }
}

impl fmt::Debug for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TriPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::q;

    #[test]
    fn graded_lex_order() {
        let p = TriPoly::parse("s4 + s2^2 + 1 + s2*s3 + s2", DIHEDRAL_VARS).unwrap();
        assert_eq!(p.to_canonical_string(DIHEDRAL_VARS), "s2^2+s2*s3+s2+s4+1");
    }

    #[test]
    fn parse_merges_and_cancels() {
        let p = TriPoly::parse("2*s2*s3 - s3*s2 - s2*s3 + 3/2", DIHEDRAL_VARS).unwrap();
        assert_eq!(p, TriPoly::constant(q(3, 2)));
        assert!(TriPoly::parse("2*s5", DIHEDRAL_VARS).is_err());
        assert!(TriPoly::parse("", DIHEDRAL_VARS).is_err());
    }

    #[test]
    fn zero_polynomial_evaluates_to_zero() {
        assert_eq!(TriPoly::zero().eval(&[q(3, 1), q(-1, 2), q(7, 1)]), q(0, 1));
        assert_eq!(TriPoly::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic_and_specialization() {
        let x = TriPoly::var(0);
        let y = TriPoly::var(1);
        let p = x.add(&y).pow(2).sub(&x.mul(&x));
        assert_eq!(p.to_string(), "2*s2*s3+s3^2");
        let at = [q(2, 1), q(0, 1), q(0, 1)];
        assert_eq!(p.specialize(1, &at), UniPoly::from_ints(&[0, 4, 1]));
        let c = p.compose(&[y.clone(), x.clone(), TriPoly::var(2)]);
        assert_eq!(c.to_string(), "s2^2+2*s2*s3");
    }
}
