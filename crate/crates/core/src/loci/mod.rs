//! Locus membership and classification on the dihedral moduli space.

mod f1;
mod f1_table;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub use f1::{f1, f1_eval, f1_from_table, f1_from_text, f1_sha256};

use crate::error::{Error, Result};
use crate::exact::{Rational, TriPoly, DIHEDRAL_VARS};
use crate::invariants::{delta_s, DihedralPoint};

/// Automorphism group of a curve in the dihedral normal form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum AutGroupLabel {
    #[serde(rename = "Z2")]
    Z2,
    #[serde(rename = "Z2xZ2")]
    Z2xZ2,
    #[serde(rename = "Z2^3")]
    Z2Cubed,
    #[serde(rename = "Z2xZ4")]
    Z2xZ4,
    #[serde(rename = "Z2xD8")]
    Z2xD8,
    #[serde(rename = "D12")]
    D12,
    #[serde(rename = "other")]
    Other,
}

impl AutGroupLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            AutGroupLabel::Z2 => "Z2",
            AutGroupLabel::Z2xZ2 => "Z2xZ2",
            AutGroupLabel::Z2Cubed => "Z2^3",
            AutGroupLabel::Z2xZ4 => "Z2xZ4",
            AutGroupLabel::Z2xD8 => "Z2xD8",
            AutGroupLabel::D12 => "D12",
            AutGroupLabel::Other => "other",
        }
    }

    /// Group order, or `None` for [`AutGroupLabel::Other`].
    pub fn order(&self) -> Option<u32> {
        match self {
            AutGroupLabel::Z2 => Some(2),
            AutGroupLabel::Z2xZ2 => Some(4),
            AutGroupLabel::Z2Cubed | AutGroupLabel::Z2xZ4 => Some(8),
            AutGroupLabel::D12 => Some(12),
            AutGroupLabel::Z2xD8 => Some(16),
            AutGroupLabel::Other => None,
        }
    }

    /// The same group in the splitting table's vocabulary.
    pub fn group(&self) -> Option<Group> {
        match self {
            AutGroupLabel::Z2 => Some(Group::C2),
            AutGroupLabel::Z2xZ2 => Some(Group::V4),
            AutGroupLabel::Z2Cubed => Some(Group::C2Cubed),
            AutGroupLabel::Z2xZ4 => Some(Group::C2xC4),
            AutGroupLabel::Z2xD8 => Some(Group::C2xD8),
            AutGroupLabel::D12 => Some(Group::D12),
            AutGroupLabel::Other => None,
        }
    }
}

impl fmt::Display for AutGroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `Δ_s = 0` away from `M = 0` means no curve; on `M = 0` the dihedral
/// coordinates degenerate and `Δ_s` vanishes identically along `s3 = 0`.
fn gate(p: &DihedralPoint) -> Result<()> {
    if delta_s(p).is_zero() && !p.m().is_zero() {
        return Err(Error::NotACurve);
    }
    Ok(())
}

/// `s3` and `s4` of the D12 stratum as functions of `s2`.
pub fn d12_curve(s2: &Rational) -> (Rational, Rational) {
    let q = Rational::new;
    let s3 = q(1, 75) * (q(9, 1) * s2 - q(224, 1)) * (s2 - q(196, 1));
    let s4 = q(-9, 125) * s2.pow(3) + q(1962, 125) * s2.square() - q(840448, 1125) * s2 + q(9834496, 1125);
    (s3, s4)
}

fn on_d12(p: &DihedralPoint) -> bool {
    let (s3, s4) = d12_curve(&p.s2);
    s3 == p.s3 && s4 == p.s4
}

/// Most specific automorphism group; larger groups take precedence when
/// several defining conditions hold.
pub fn classify_aut(p: &DihedralPoint) -> Result<AutGroupLabel> {
    gate(p)?;
    let two_s2_sq = Rational::from_int(2) * p.s2.square();
    let label = if p.s2.is_zero() && p.s4.is_zero() {
        AutGroupLabel::Z2xD8
    } else if on_d12(p) {
        AutGroupLabel::D12
    } else if (&p.s4 + &two_s2_sq).is_zero() && p.s3.is_zero() {
        AutGroupLabel::Z2xZ4
    } else if (&p.s4 - &two_s2_sq).is_zero() {
        AutGroupLabel::Z2Cubed
    } else {
        AutGroupLabel::Z2xZ2
    };
    Ok(label)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
pub enum LocusComponent {
    /// `2s2² − s4 = 0`
    T1,
    /// `2s2² + s4 = 0`
    T2,
    /// `F1 = 0`
    T3,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LocusVerdict {
    pub in_t: bool,
    pub components: Vec<LocusComponent>,
    pub f1_value: Rational,
}

pub fn locus_t(p: &DihedralPoint) -> Result<LocusVerdict> {
    gate(p)?;
    let two_s2_sq = Rational::from_int(2) * p.s2.square();
    let f1_value = f1_eval(&p.coords());
    let mut components = Vec::new();
    if (&two_s2_sq - &p.s4).is_zero() {
        components.push(LocusComponent::T1);
    }
    if (&two_s2_sq + &p.s4).is_zero() {
        components.push(LocusComponent::T2);
    }
    if f1_value.is_zero() {
        components.push(LocusComponent::T3);
    }
    Ok(LocusVerdict { in_t: !components.is_empty(), components, f1_value })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Trichotomy {
    #[serde(rename = "Z2^3-case")]
    Z2CubedCase,
    #[serde(rename = "Z2xZ4-case")]
    Z2xZ4Case,
    #[serde(rename = "T3-case")]
    T3Case,
    #[serde(rename = "not-split")]
    NotSplit,
}

/// Which factor of the locus equation vanishes, checked in the order T1, T2, F1.
pub fn trichotomy(p: &DihedralPoint) -> Result<Trichotomy> {
    let v = locus_t(p)?;
    Ok(match v.components.first() {
        Some(LocusComponent::T1) => Trichotomy::Z2CubedCase,
        Some(LocusComponent::T2) => Trichotomy::Z2xZ4Case,
        Some(LocusComponent::T3) => Trichotomy::T3Case,
        None => Trichotomy::NotSplit,
    })
}

const G_TEXT: [&str; 5] = [
    "s4+2*s2^2-100*s2+625",
    "-27*s4+s2^3+6*s2^2+768*s2-4096",
    "-16777216+5242880*s2-450560*s2^2+7680*s2^3-340*s2^4+8*s2^5-102400*s4+16640*s2*s4\
-220*s2^2*s4+4*s4*s2^3-125*s4^2",
    "3515625-937500*s2+62500*s2^2+64*s2^4+15000*s4-2000*s2*s4",
    "35153041-16173862*s4+2926323*s4^2+131244344*s2-11788512*s2^4+133698380*s2^2+41050*s4^3\
+1792*s2^7+22764*s4^2*s2^3-21768*s2^5*s4+136952*s2^6-134208*s2^5+16762008*s2^3-57934*s2^2*s4^2\
-111744*s4*s2^4-1040380*s2*s4^2+1987608*s4*s2^3+2559786*s2^2*s4-27622208*s2*s4-16*s2^7*s4\
-316*s2^6*s4+16*s2^5*s4^2-4*s2^3*s4^3-530*s2^2*s4^3-6180*s2*s4^3+685*s2^4*s4^2+132*s2^8+125*s4^4",
];

/// The five component polynomials `g1..g5` of the isomorphic-subcover locus,
/// in `(s2, s3, s4)` with `s3` absent.
pub fn g_polys() -> &'static [TriPoly; 5] {
    static CELL: OnceLock<[TriPoly; 5]> = OnceLock::new();
    CELL.get_or_init(|| G_TEXT.map(|t| TriPoly::parse(t, DIHEDRAL_VARS).expect("g polynomial parses")))
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum FrakTComponent {
    G1,
    G2,
    G3,
    G4,
    G5,
}

impl FrakTComponent {
    pub const ALL: [FrakTComponent; 5] =
        [FrakTComponent::G1, FrakTComponent::G2, FrakTComponent::G3, FrakTComponent::G4, FrakTComponent::G5];

    pub fn index(&self) -> usize {
        *self as usize
    }

    pub fn poly(&self) -> &'static TriPoly {
        &g_polys()[self.index()]
    }

    pub fn eval(&self, s2: &Rational, s4: &Rational) -> Rational {
        self.poly().eval(&[s2.clone(), Rational::zero(), s4.clone()])
    }

    /// `s4` as an exact function of `s2` on the components linear in `s4`.
    pub fn solve_s4_exact(&self, s2: &Rational) -> Option<Rational> {
        let poly = self.poly().specialize(2, &[s2.clone(), Rational::zero(), Rational::zero()]);
        if poly.degree() != Some(1) {
            return None;
        }
        Some(-poly.coeff(0) / poly.coeff(1))
    }
}

impl fmt::Display for FrakTComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.index() + 1)
    }
}

impl FromStr for FrakTComponent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "g1" | "1" => Ok(FrakTComponent::G1),
            "g2" | "2" => Ok(FrakTComponent::G2),
            "g3" | "3" => Ok(FrakTComponent::G3),
            "g4" | "4" => Ok(FrakTComponent::G4),
            "g5" | "5" => Ok(FrakTComponent::G5),
            other => Err(Error::Parse(format!("unknown component {other:?}, expected g1..g5"))),
        }
    }
}

/// Components among `g1..g5` vanishing at `(s2, s4)`.
pub fn frak_t_components(s2: &Rational, s4: &Rational) -> Vec<FrakTComponent> {
    FrakTComponent::ALL.into_iter().filter(|g| g.eval(s2, s4).is_zero()).collect()
}

/// Groups appearing in the Jacobian splitting table for genus 3.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Group {
    C2,
    V4,
    C2xC4,
    C2Cubed,
    C2xD8,
    D12,
    C2xS4,
    S3,
    D8,
    S4,
    L3_2,
    C2CubedSemiS3,
    /// Any group of the given order not named above.
    Order(u32),
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        let g = match key.as_str() {
            "c2" | "z2" => Group::C2,
            "v4" | "z2xz2" | "c2xc2" => Group::V4,
            "c2xc4" | "z2xz4" => Group::C2xC4,
            "c2^3" | "z2^3" => Group::C2Cubed,
            "c2xd8" | "z2xd8" => Group::C2xD8,
            "d12" => Group::D12,
            "c2xs4" | "z2xs4" => Group::C2xS4,
            "s3" => Group::S3,
            "d8" => Group::D8,
            "s4" => Group::S4,
            "l3(2)" | "l3_2" | "psl(2,7)" => Group::L3_2,
            "c2^3:s3" | "c2^3xs3" | "c2^3|xs3" => Group::C2CubedSemiS3,
            other => match other.strip_prefix("order") {
                Some(n) => Group::Order(n.parse().map_err(|_| Error::Parse(format!("bad group {s:?}")))?),
                None => return Err(Error::Parse(format!("unknown group {s:?}"))),
            },
        };
        Ok(g)
    }
}

/// Isogeny shape of the Jacobian.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SplitType {
    #[serde(rename = "ExJac2")]
    ExJac2,
    #[serde(rename = "E1xE2xE3")]
    E1xE2xE3,
    #[serde(rename = "E1^2xE2")]
    E1SqxE2,
    #[serde(rename = "E^3")]
    ECubed,
}

impl fmt::Display for SplitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitType::ExJac2 => "E x Jac2",
            SplitType::E1xE2xE3 => "E1 x E2 x E3",
            SplitType::E1SqxE2 => "E1^2 x E2",
            SplitType::ECubed => "E^3",
        })
    }
}

fn group_name(g: Group) -> String {
    match g {
        Group::Order(n) => format!("order {n}"),
        other => format!("{other:?}"),
    }
}

/// Splitting of the Jacobian of a genus-3 curve from its automorphism group.
pub fn split_type(group: Group, hyperelliptic: bool) -> Result<SplitType> {
    use Group::*;
    let shape = if hyperelliptic {
        match group {
            V4 | C2xC4 => SplitType::ExJac2,
            C2Cubed => SplitType::E1xE2xE3,
            D12 | C2xS4 | Order(24) | Order(32) => SplitType::E1SqxE2,
            g => return Err(Error::UnknownGroup(group_name(g))),
        }
    } else {
        match group {
            C2 => SplitType::ExJac2,
            V4 => SplitType::E1xE2xE3,
            S3 | D8 | Order(16) | Order(48) => SplitType::E1SqxE2,
            S4 | L3_2 | C2CubedSemiS3 => SplitType::ECubed,
            g => return Err(Error::UnknownGroup(group_name(g))),
        }
    };
    Ok(shape)
}
