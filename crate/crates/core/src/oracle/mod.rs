//! Independent numeric checks: root finding, involution search, the V₄
//! normal form, numeric `(u, v)`, subcover j-invariants and Igusa-type
//! absolute invariants. Nothing here reads the closed forms it checks.

mod igusa;
mod involution;
mod lift;
pub mod mp;
mod normal;
mod roots;

use serde::Serialize;

pub use igusa::{calibrated_constants, igusa_invariants, igusa_invariants_cx, IgusaInvariants, ABSOLUTE_CONSTANTS};
pub use involution::{detect_involution, detect_involution_cx, sextic_points, HomPoint, InvolutionWitness};
pub use lift::{curve_from_s_numeric, eval_tripoly_cx, specialize_cx, subcover_sextic_cx};
pub use normal::{
    subcover_js, subcover_js_cx, subcover_js_from_witness, uv_convention, uv_numeric, uv_numeric_cx, v4_normal_form, NormalForm, UvNumeric,
};
pub use roots::{roots, roots_cx, ComplexApprox};

use mp::Cx;

pub const DEFAULT_PRECISION_BITS: usize = 128;
pub const PRECISION_ENV: &str = "SPLIT244_PRECISION_BITS";

/// Numeric knobs shared by every oracle operation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleConfig {
    pub precision_bits: usize,
    /// Escalation stops once the working precision would exceed this.
    pub max_precision_bits: usize,
    pub tolerance: f64,
    pub involution_tolerance: f64,
    pub max_iterations: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            precision_bits: DEFAULT_PRECISION_BITS,
            max_precision_bits: 1024,
            tolerance: 1e-9,
            involution_tolerance: 1e-6,
            max_iterations: 500,
        }
    }
}

impl OracleConfig {
    /// Defaults, with the precision taken from `SPLIT244_PRECISION_BITS` if set.
    pub fn from_env() -> Self {
        let mut cfg = OracleConfig::default();
        if let Some(bits) = std::env::var(PRECISION_ENV).ok().and_then(|s| s.trim().parse::<usize>().ok()) {
            cfg.precision_bits = bits.max(53);
            cfg.max_precision_bits = cfg.max_precision_bits.max(cfg.precision_bits);
        }
        cfg
    }

    pub fn with_precision(mut self, bits: usize) -> Self {
        self.precision_bits = bits.max(53);
        self.max_precision_bits = self.max_precision_bits.max(self.precision_bits);
        self
    }
}

/// A complex number rounded to `f64` for reports.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct CxValue {
    pub re: f64,
    pub im: f64,
}

impl CxValue {
    pub fn abs(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn dist(&self, re: f64, im: f64) -> f64 {
        (self.re - re).hypot(self.im - im)
    }
}

impl From<&Cx> for CxValue {
    fn from(z: &Cx) -> Self {
        let (re, im) = z.to_f64();
        CxValue { re, im }
    }
}

/// Ordering key that ignores noise below `1e-9` relative.
pub(crate) fn order_key(z: &CxValue) -> (f64, f64) {
    let snap = |x: f64| {
        let s = 1e9 / x.abs().max(1.0);
        (x * s).round() / s
    };
    (snap(z.re), snap(z.im))
}

pub(crate) fn cmp_cx(a: &CxValue, b: &CxValue) -> std::cmp::Ordering {
    let (ka, kb) = (order_key(a), order_key(b));
    ka.0.total_cmp(&kb.0).then(ka.1.total_cmp(&kb.1))
}

/// Runs `f` at the configured precision, doubling while it fails to converge.
pub(crate) fn escalate<T>(cfg: &OracleConfig, mut f: impl FnMut(usize) -> crate::Result<T>) -> crate::Result<T> {
    let mut bits = cfg.precision_bits;
    loop {
        match f(bits) {
            Ok(v) => return Ok(v),
            Err(e @ crate::Error::NonConvergence { .. }) => {
                if bits * 2 > cfg.max_precision_bits {
                    return Err(e);
                }
                bits *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}
