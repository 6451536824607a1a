//! Even-degree invariants of a binary sextic from root brackets, and the
//! absolute invariants built from them.

use std::sync::OnceLock;

use serde::Serialize;

use super::involution::{pairings, sextic_points, HomPoint};
use super::mp::{fl_int, pow2, to_f64, Cx};
use super::{CxValue, OracleConfig};
use crate::curves::Genus2Curve;
use crate::error::{Error, Result};

/// `(c1, c2, c3)` in `c1·J4/J2²`, `c2·(J2J4 − 3J6)/J2³`, `c3·J10/J2⁵`.
pub const ABSOLUTE_CONSTANTS: [i64; 3] = [144, -1728, 486];

#[derive(Clone, Debug, Serialize)]
pub struct IgusaInvariants {
    pub j2: CxValue,
    pub j4: CxValue,
    pub j6: CxValue,
    pub j10: CxValue,
    pub i1: CxValue,
    pub i2: CxValue,
    pub i3: CxValue,
}

struct Raw {
    j: [Cx; 4],
    /// Sum of absolute values of the J2 terms, for the vanishing test.
    j2_scale: f64,
}

/// The 10 ways to split `0..6` into two triples, the one holding 0 first.
fn triple_splits() -> Vec<([usize; 3], [usize; 3])> {
    let mut out = Vec::with_capacity(10);
    for a in 1..6 {
        for b in a + 1..6 {
            let rest: Vec<usize> = (1..6).filter(|&i| i != a && i != b).collect();
            out.push(([0, a, b], [rest[0], rest[1], rest[2]]));
        }
    }
    out
}

const PERMS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn raw_invariants(pts: &[HomPoint], lead: &Cx) -> Raw {
    let bits = lead.precision();
    // sq[i][j] = (x_i z_j − x_j z_i)²
    let mut sq = vec![vec![Cx::zero(bits); 6]; 6];
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                sq[i][j] = (&(&pts[i].x * &pts[j].z) - &(&pts[j].x * &pts[i].z)).square();
            }
        }
    }
    let prod = |ps: &[(usize, usize)]| ps.iter().fold(Cx::one(bits), |acc, &(i, j)| &acc * &sq[i][j]);
    let tri = |t: &[usize; 3]| prod(&[(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]);

    let mut j2 = Cx::zero(bits);
    let mut j2_scale = 0.0;
    for p in pairings() {
        let term = prod(&p);
        j2_scale += term.abs_f64();
        j2 = &j2 + &term;
    }
    let mut j4 = Cx::zero(bits);
    let mut j6 = Cx::zero(bits);
    for (t, s) in triple_splits() {
        let base = &tri(&t) * &tri(&s);
        j4 = &j4 + &base;
        for pi in PERMS3 {
            let m = prod(&[(t[0], s[pi[0]]), (t[1], s[pi[1]]), (t[2], s[pi[2]])]);
            j6 = &j6 + &(&base * &m);
        }
    }
    let mut j10 = Cx::one(bits);
    for (i, row) in sq.iter().enumerate() {
        for d in &row[i + 1..] {
            j10 = &j10 * d;
        }
    }
    let c2 = lead.square();
    let c4 = c2.square();
    let c6 = &c4 * &c2;
    let c10 = &c6 * &c4;
    Raw { j: [&j2 * &c2, &j4 * &c4, &j6 * &c6, &j10 * &c10], j2_scale: j2_scale * c2.abs_f64() }
}

/// Leading factor `c` of `f = c·∏(zᵢX − xᵢZ)` with finite roots `(r : 1)`
/// and the root at infinity `(1 : 0)`.
fn leading_factor(coeffs: &[Cx]) -> Cx {
    if coeffs.len() > 6 && !coeffs[6].is_zero() {
        coeffs[6].clone()
    } else {
        -&coeffs[5]
    }
}

fn compute(coeffs: &[Cx], cfg: &OracleConfig, constants: [i64; 3]) -> Result<(Raw, [Cx; 3])> {
    let pts = sextic_points(coeffs, cfg)?;
    let bits = pts[0].x.precision();
    let lead = leading_factor(coeffs);
    let lead = Cx::new(lead.re.with_precision(bits).value(), lead.im.with_precision(bits).value());
    let raw = raw_invariants(&pts, &lead);
    let [j2, j4, j6, j10] = &raw.j;
    if j2.abs_f64() <= to_f64(&pow2(-(bits as isize) / 2, bits)) * raw.j2_scale {
        return Err(Error::J2Vanishes);
    }
    let k = |n: i64| Cx::from_real(fl_int(n, bits), bits);
    let i1 = (&k(constants[0]) * j4).div(&j2.square());
    let i2 = (&k(constants[1]) * &(&(j2 * j4) - &(&k(3) * j6))).div(&j2.powu(3));
    let i3 = (&k(constants[2]) * j10).div(&j2.powu(5));
    Ok((raw, [i1, i2, i3]))
}

fn to_report(raw: &Raw, i: &[Cx; 3]) -> IgusaInvariants {
    let v = CxValue::from;
    IgusaInvariants {
        j2: v(&raw.j[0]),
        j4: v(&raw.j[1]),
        j6: v(&raw.j[2]),
        j10: v(&raw.j[3]),
        i1: v(&i[0]),
        i2: v(&i[1]),
        i3: v(&i[2]),
    }
}

/// Constants solved on `y² = x(x⁴ + x³ + x² + x + 1)` against the anchor
/// triple `(−48/5, 432/5, 1/400)`. The self-test requires them to round to
/// [`ABSOLUTE_CONSTANTS`].
pub fn calibrated_constants() -> Result<[f64; 3]> {
    static CELL: OnceLock<std::result::Result<[f64; 3], String>> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = OracleConfig::default();
        let bits = cfg.precision_bits;
        let c: Vec<Cx> = [0, 1, 1, 1, 1, 1].iter().map(|&k| Cx::from_real(fl_int(k, bits), bits)).collect();
        let (raw, basis) = compute(&c, &cfg, [1, 1, 1]).map_err(|e| e.to_string())?;
        let _ = raw;
        let target = [-48.0 / 5.0, 432.0 / 5.0, 1.0 / 400.0];
        let mut solved = [0.0; 3];
        for k in 0..3 {
            let b = CxValue::from(&basis[k]);
            if b.im.abs() > 1e-12 * b.re.abs() {
                return Err(format!("basis value {k} is not real: {b:?}"));
            }
            solved[k] = target[k] / b.re;
        }
        for k in 0..3 {
            let frozen = ABSOLUTE_CONSTANTS[k] as f64;
            if (solved[k] - frozen).abs() > 1e-9 * frozen.abs() {
                return Err(format!(
                    "solved constants {solved:?} do not match frozen {ABSOLUTE_CONSTANTS:?}"
                ));
            }
        }
        Ok(solved)
    })
    .clone()
    .map_err(Error::CalibrationFailure)
}

/// Bracket invariants `(J2, J4, J6, J10)` and absolute `(i1, i2, i3)`.
pub fn igusa_invariants(c: &Genus2Curve, cfg: &OracleConfig) -> Result<IgusaInvariants> {
    let bits = cfg.precision_bits;
    let coeffs: Vec<Cx> = c.homogeneous_coeffs().iter().map(|r| Cx::from_rational(r, bits)).collect();
    igusa_invariants_cx(&coeffs, cfg)
}

pub fn igusa_invariants_cx(coeffs: &[Cx], cfg: &OracleConfig) -> Result<IgusaInvariants> {
    calibrated_constants()?;
    let (raw, i) = compute(coeffs, cfg, ABSOLUTE_CONSTANTS)?;
    Ok(to_report(&raw, &i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::{genus2_from_uv, UVPoint};
    use crate::exact::{q, UniPoly};

    #[test]
    fn calibration_self_test() {
        let k = calibrated_constants().unwrap();
        assert!((k[0] - 144.0).abs() < 1e-20);
        assert!((k[1] + 1728.0).abs() < 1e-20);
        assert!((k[2] - 486.0).abs() < 1e-20);
    }

    #[test]
    fn example_triple() {
        let c = Genus2Curve::new(UniPoly::from_ints(&[0, 1, 1, 1, 1, 1])).unwrap();
        let g = igusa_invariants(&c, &OracleConfig::default()).unwrap();
        assert!(g.i1.dist(-9.6, 0.0) < 1e-20);
        assert!(g.i2.dist(86.4, 0.0) < 1e-20);
        assert!(g.i3.dist(0.0025, 0.0) < 1e-20);
    }

    #[test]
    fn moduli_invariance() {
        // y² = x⁶ − 1 against a Möbius image of it.
        let cfg = OracleConfig::default();
        let a = Genus2Curve::new(UniPoly::from_ints(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        let b = genus2_from_uv(&UVPoint::new(q(3, 1), q(-7, 2))).unwrap();
        let ga = igusa_invariants(&a, &cfg).unwrap();
        let gb = igusa_invariants(&b, &cfg).unwrap();
        // Reordering the same sextic's coefficients (x ↦ 1/x) keeps the moduli point.
        let mut rev = b.sextic().coeffs().to_vec();
        rev.reverse();
        let br = Genus2Curve::new(UniPoly::new(rev)).unwrap();
        let gbr = igusa_invariants(&br, &cfg).unwrap();
        for (x, y) in [(gb.i1, gbr.i1), (gb.i2, gbr.i2), (gb.i3, gbr.i3)] {
            assert!(x.dist(y.re, y.im) < 1e-9 * x.abs().max(1.0));
        }
        assert!(ga.i1.dist(gb.i1.re, gb.i1.im) > 1e-3);
    }
}
