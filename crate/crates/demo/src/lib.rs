//! Three operations for the static page in `www/`. Inputs are strings so
//! rationals like `-754/5` pass through unchanged; outputs are JSON.

use serde_json::json;
use wasm_bindgen::prelude::wasm_bindgen;

use split244::curves::{genus2_from_uv, UVPoint};
use split244::exact::Rational;
use split244::family::{family_scan, sample_s2_values};
use split244::invariants::DihedralPoint;
use split244::loci::FrakTComponent;
use split244::oracle::{igusa_invariants, subcover_js, uv_numeric, OracleConfig};
use split244::pipeline::{analyze_curve, analyze_moduli};

/// Largest family scan the page will run; each `s2` costs a few root solves.
const MAX_SCAN: u32 = 12;

fn rat(name: &str, s: &str) -> Result<Rational, String> {
    s.trim().parse().map_err(|e| format!("{name}: {e}"))
}

fn to_json<T: serde::Serialize>(x: &T) -> Result<String, String> {
    serde_json::to_string_pretty(x).map_err(|e| e.to_string())
}

/// Report for `(a, b, c)`, or for `(s2, s3, s4)` when `moduli` is set.
#[wasm_bindgen]
pub fn analyze(x: &str, y: &str, z: &str, moduli: bool) -> Result<String, String> {
    let cfg = OracleConfig::default();
    let report = if moduli {
        let p = DihedralPoint::new(rat("s2", x)?, rat("s3", y)?, rat("s4", z)?);
        analyze_moduli(p, &cfg)
    } else {
        analyze_curve(rat("a", x)?, rat("b", y)?, rat("c", z)?, &cfg)
    };
    to_json(&report.map_err(|e| e.to_string())?)
}

/// Genus-2 curve of `(u, v)`, read back by the oracle.
#[wasm_bindgen]
pub fn reconstruct(u: &str, v: &str) -> Result<String, String> {
    let cfg = OracleConfig::default();
    let p = UVPoint::new(rat("u", u)?, rat("v", v)?);
    let c = genus2_from_uv(&p).map_err(|e| e.to_string())?;
    let n = uv_numeric(&c, &cfg).map_err(|e| e.to_string())?;
    let js = subcover_js(&c, &n.witness, &cfg).map_err(|e| e.to_string())?;
    let i = igusa_invariants(&c, &cfg).map_err(|e| e.to_string())?;
    to_json(&json!({
        "input": p,
        "curve": c,
        "uv_numeric": {"u": n.u, "v": n.v, "residual": n.residual},
        "js": js,
        "absolute_invariants": {"i1": i.i1, "i2": i.i2, "i3": i.i3},
    }))
}

/// Points on component `g1..g5` cut with `F1 = 0`, for `count` seeded `s2`.
#[wasm_bindgen]
pub fn scan(component: &str, seed: u32, count: u32) -> Result<String, String> {
    let g: FrakTComponent = component.parse().map_err(|e: split244::Error| e.to_string())?;
    let s2 = sample_s2_values(u64::from(seed), count.min(MAX_SCAN) as usize, -5, 5);
    to_json(&family_scan(g, &s2, &OracleConfig::default()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_analysis() {
        let out: serde_json::Value = serde_json::from_str(&analyze("1", "1", "1", false).unwrap()).unwrap();
        assert_eq!(out["jE"], "2048");
        let out: serde_json::Value = serde_json::from_str(&analyze("1", "2", "2", true).unwrap()).unwrap();
        assert_eq!(out["aut_group"], "Z2^3");
        assert!(analyze("1", "0", "1", false).unwrap_err().contains("singular"));
        assert!(analyze("x", "0", "1", false).unwrap_err().starts_with("a:"));
    }

    #[test]
    fn reconstruct_round_trip() {
        let out: serde_json::Value = serde_json::from_str(&reconstruct("8", "45").unwrap()).unwrap();
        assert!((out["uv_numeric"]["u"]["re"].as_f64().unwrap() - 8.0).abs() < 1e-20);
        assert!((out["js"][0]["re"].as_f64().unwrap() - 256.0).abs() < 1e-6);
        assert!(reconstruct("0", "0").is_err());
    }

    #[test]
    fn scan_is_capped_and_ordered() {
        let out: serde_json::Value = serde_json::from_str(&scan("g1", 3, 2).unwrap()).unwrap();
        let idx: Vec<u64> = out.as_array().unwrap().iter().map(|p| p["index"].as_u64().unwrap()).collect();
        assert!(idx.windows(2).all(|w| w[0] <= w[1]));
        assert!(scan("g6", 1, 1).is_err());
    }
}
