//! Aberth–Ehrlich simultaneous iteration.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::mp::{fl_int, pow2, to_f64, Cx, Fl};
use super::{cmp_cx, escalate, CxValue, OracleConfig};
use crate::error::{Error, Result};
use crate::exact::UniPoly;

/// A root together with its backward residual `|f(r)| / Σ|aᵢ||r|ⁱ` and a
/// relative condition estimate `Σ|aᵢ||r|ⁱ / (|f'(r)|·max(1,|r|))`.
#[derive(Clone, Debug)]
pub struct ComplexApprox {
    value: Cx,
    pub residual: f64,
    pub condition: f64,
}

impl ComplexApprox {
    pub fn value(&self) -> &Cx {
        &self.value
    }

    pub fn re(&self) -> f64 {
        to_f64(&self.value.re)
    }

    pub fn im(&self) -> f64 {
        to_f64(&self.value.im)
    }

    pub fn approx(&self) -> CxValue {
        CxValue::from(&self.value)
    }
}

impl Serialize for ComplexApprox {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ComplexApprox", 4)?;
        st.serialize_field("re", &self.re())?;
        st.serialize_field("im", &self.im())?;
        st.serialize_field("residual", &self.residual)?;
        st.serialize_field("condition", &self.condition)?;
        st.end()
    }
}

/// All complex roots of a rational polynomial.
pub fn roots(f: &UniPoly, cfg: &OracleConfig) -> Result<Vec<ComplexApprox>> {
    let deg = f.degree().unwrap_or(0);
    if deg < 1 {
        return Err(Error::DegreeTooLow { need: 1, got: deg });
    }
    escalate(cfg, |bits| {
        let c: Vec<Cx> = f.coeffs().iter().map(|r| Cx::from_rational(r, bits)).collect();
        deflated_aberth(&c, bits, cfg)
    })
}

/// All complex roots of a polynomial with complex coefficients (ascending).
/// Exactly-zero top coefficients are dropped.
pub fn roots_cx(coeffs: &[Cx], cfg: &OracleConfig) -> Result<Vec<ComplexApprox>> {
    let mut c = coeffs.to_vec();
    while c.last().is_some_and(Cx::is_zero) {
        c.pop();
    }
    if c.len() < 2 {
        return Err(Error::DegreeTooLow { need: 1, got: 0 });
    }
    escalate(cfg, |bits| {
        let c: Vec<Cx> = c.iter().map(|z| round_to(z, bits)).collect();
        deflated_aberth(&c, bits, cfg)
    })
}

/// Exact zero roots are split off first: Aberth converges only linearly
/// towards a root at the origin when the constant term is exactly zero.
fn deflated_aberth(c: &[Cx], bits: usize, cfg: &OracleConfig) -> Result<Vec<ComplexApprox>> {
    let k = c.iter().take_while(|a| a.is_zero()).count();
    let mut out = if c.len() - k > 1 { aberth(&c[k..], bits, cfg)? } else { Vec::new() };
    out.extend((0..k).map(|_| certify(c, Cx::zero(bits), bits)));
    out.sort_by(|a, b| cmp_cx(&a.approx(), &b.approx()));
    Ok(out)
}

fn round_to(z: &Cx, bits: usize) -> Cx {
    Cx::new(z.re.clone().with_precision(bits).value(), z.im.clone().with_precision(bits).value())
}

/// Value and derivative by Horner's rule.
fn horner2(c: &[Cx], z: &Cx, bits: usize) -> (Cx, Cx) {
    let mut p = Cx::zero(bits);
    let mut dp = Cx::zero(bits);
    for a in c.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + a;
    }
    (p, dp)
}

/// Smaller of the Cauchy and Fujiwara radii, in `f64`.
fn root_radius(c: &[Cx]) -> f64 {
    let n = c.len() - 1;
    let lead = c[n].abs_f64();
    let ratios: Vec<f64> = c[..n].iter().map(|a| a.abs_f64() / lead).collect();
    let cauchy = 1.0 + ratios.iter().cloned().fold(0.0, f64::max);
    let fujiwara = 2.0
        * (1..=n)
            .map(|k| {
                let r = ratios[n - k] / if k == n { 2.0 } else { 1.0 };
                r.powf(1.0 / k as f64)
            })
            .fold(0.0, f64::max);
    let r = cauchy.min(fujiwara);
    if r.is_finite() && r > 0.0 {
        r
    } else {
        1.0
    }
}

fn aberth(c: &[Cx], bits: usize, cfg: &OracleConfig) -> Result<Vec<ComplexApprox>> {
    let n = c.len() - 1;
    let radius = root_radius(c);
    // Fixed, asymmetric start so that runs are reproducible and real
    // polynomials do not keep conjugate pairs locked together.
    let mut z: Vec<Cx> = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Cx::from_f64(radius * t.cos(), radius * t.sin(), bits)
        })
        .collect();
    let one = Cx::one(bits);
    let one_fl = fl_int(1, bits);
    let eps2 = pow2(-2 * (bits as isize - 12), bits);
    let c_abs: Vec<Fl> = c.iter().map(Cx::abs).collect();
    let mut done = vec![false; n];
    let mut converged = false;
    for _ in 0..cfg.max_iterations {
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = horner2(c, &z[k], bits);
            // Backward-stable stop: |f(z)| at rounding level of Σ|aᵢ||z|ⁱ.
            // This is what ends the iteration at multiple roots, where the
            // correction itself stalls at about the square root of epsilon.
            let zabs = z[k].abs();
            let mut bound = Fl::ZERO;
            for a in c_abs.iter().rev() {
                bound = &bound * &zabs + a;
            }
            if p.norm_sqr() <= &eps2 * &(&bound * &bound) {
                done[k] = true;
                continue;
            }
            let mut s = Cx::zero(bits);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let d = &z[k] - zj;
                    if !d.is_zero() {
                        s = &s + &d.recip();
                    }
                }
            }
            let w = if dp.is_zero() {
                // Stationary point: nudge and retry next sweep.
                Cx::new(pow2(-(bits as isize) / 4, bits), pow2(-(bits as isize) / 3, bits))
            } else {
                let ratio = p.div(&dp);
                let den = &one - &(&ratio * &s);
                if den.is_zero() {
                    ratio
                } else {
                    ratio.div(&den)
                }
            };
            z[k] = &z[k] - &w;
            let mag = z[k].norm_sqr();
            let scale = if mag > one_fl { mag } else { one_fl.clone() };
            if w.norm_sqr() <= &eps2 * &scale {
                done[k] = true;
            }
        }
        if done.iter().all(|&d| d) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence { iterations: cfg.max_iterations, bits });
    }
    let mut out: Vec<ComplexApprox> = z.into_iter().map(|r| certify(c, r, bits)).collect();
    if out.iter().any(|r| r.residual.partial_cmp(&cfg.tolerance) != Some(std::cmp::Ordering::Less)) {
        return Err(Error::NonConvergence { iterations: cfg.max_iterations, bits });
    }
    out.sort_by(|a, b| cmp_cx(&a.approx(), &b.approx()));
    Ok(out)
}

fn certify(c: &[Cx], r: Cx, bits: usize) -> ComplexApprox {
    let (p, dp) = horner2(c, &r, bits);
    let rabs = r.abs();
    let mut scale = Fl::ZERO;
    let mut pw = fl_int(1, bits);
    for a in c {
        scale = &scale + &(a.abs() * &pw);
        pw = &pw * &rabs;
    }
    let residual = if scale == Fl::ZERO { 0.0 } else { to_f64(&(p.abs() / &scale)) };
    let one = fl_int(1, bits);
    let rmax = if rabs > one { rabs } else { one };
    let dp_abs = dp.abs();
    let condition = if dp_abs == Fl::ZERO { f64::INFINITY } else { to_f64(&(scale / (dp_abs * rmax))) };
    ComplexApprox { value: r, residual, condition }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn close(r: &ComplexApprox, re: f64, im: f64) -> bool {
        r.approx().dist(re, im) < 1e-25
    }

    #[test]
    fn quadratic() {
        let r = roots(&UniPoly::from_ints(&[1, 0, 1]), &OracleConfig::default()).unwrap();
        assert_eq!(r.len(), 2);
        assert!(close(&r[0], 0.0, -1.0) && close(&r[1], 0.0, 1.0));
    }

    #[test]
    fn eighth_roots_of_minus_one() {
        let r = roots(&UniPoly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]), &OracleConfig::default()).unwrap();
        assert_eq!(r.len(), 8);
        for z in &r {
            assert!((z.value().abs_f64() - 1.0).abs() < 1e-30);
            assert!(z.residual < 1e-30);
        }
    }

    #[test]
    fn cyclotomic_times_x() {
        let r = roots(&UniPoly::from_ints(&[0, 1, 1, 1, 1, 1]), &OracleConfig::default()).unwrap();
        assert_eq!(r.len(), 5);
        let zero = r.iter().filter(|z| z.value().abs_f64() < 1e-30).count();
        assert_eq!(zero, 1);
        for z in r.iter().filter(|z| z.value().abs_f64() > 0.5) {
            let z5 = z.value().powu(5);
            assert!(z5.abs_f64() - 1.0 < 1e-30);
            assert!(z5.to_f64().0 > 0.999);
        }
    }

    #[test]
    fn ordering_is_lexicographic() {
        let f = UniPoly::new(vec![q(6, 1), q(-5, 1), q(1, 1)]);
        let r = roots(&f, &OracleConfig::default()).unwrap();
        assert!(close(&r[0], 2.0, 0.0) && close(&r[1], 3.0, 0.0));
    }

    #[test]
    fn clustered_roots_escalate() {
        // (x - 1)^2 (x - 1 - 2^-80): converges, possibly after escalation.
        let e = Rational::from_bigints(1.into(), num_bigint::BigInt::from(2).pow(80)).unwrap();
        let a = UniPoly::from_ints(&[-1, 1]);
        let b = UniPoly::new(vec![-(Rational::one() + e), Rational::one()]);
        let f = a.mul(&a).mul(&b);
        let r = roots(&f, &OracleConfig::default()).unwrap();
        assert_eq!(r.len(), 3);
        for z in &r {
            assert!(z.approx().dist(1.0, 0.0) < 1e-9);
        }
    }

    use crate::exact::Rational;
}
