//! `split244`: analyze curves, scan components, run the verification suites
//! and call the numeric oracle directly.

mod args;

// A closed stdout (`split244 ... | head`) ends the process quietly instead of panicking.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = write!(std::io::stdout(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}
macro_rules! outln {
    ($($t:tt)*) => {{ out!($($t)*); out!("\n"); }};
}

mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Value};

use split244::curves::{genus2_from_uv, make_genus3, subcovers, Genus2Curve, UVPoint};
use split244::exact::{Rational, UniPoly};
use split244::family::{family_scan, sample_s2_values, PointOutcome};
use split244::invariants::DihedralPoint;
use split244::loci::FrakTComponent;
use split244::oracle::{
    detect_involution, igusa_invariants, roots, subcover_js, uv_numeric, v4_normal_form, OracleConfig,
};
use split244::pipeline::{analyze_curve, analyze_moduli};
use split244::verify::{run_suite, VerifyConfig};
use split244::Error;

use args::{Cli, Command, CurveArgs, OracleOp, SexticArgs};

const EXIT_USAGE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_VERIFY: u8 = 3;

/// Failures mapped onto the exit-code contract.
enum Failure {
    Usage(String),
    Domain(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(m) => Failure::Usage(m),
            e => Failure::Domain(e),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            let err = json!({"error": format!("{e:?}"), "message": e.to_string()});
            outln!("{}", render::json(&err, cli.pretty));
            eprintln!("error: {e}");
            ExitCode::from(EXIT_DOMAIN)
        }
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
    }
}

fn oracle_config(cli: &Cli) -> OracleConfig {
    let mut cfg = OracleConfig::from_env();
    if let Some(bits) = cli.precision_bits {
        cfg = cfg.with_precision(bits);
    }
    if let Some(t) = cli.tolerance {
        cfg.tolerance = t;
    }
    cfg
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cfg = oracle_config(cli);
    let start = Instant::now();
    let emit = |mut v: Value| {
        if cli.timings {
            if let Value::Object(m) = &mut v {
                m.insert("timings".into(), json!({"total_ms": start.elapsed().as_secs_f64() * 1e3}));
            }
        }
        v
    };
    match &cli.command {
        Command::Analyze(a) => {
            let report = match a.curve.input()? {
                Input::Curve(a, b, c) => analyze_curve(a, b, c, &cfg)?,
                Input::Moduli(s) => analyze_moduli(s, &cfg)?,
            };
            let v = emit(to_value(&report));
            outln!("{}", if cli.pretty { render::report(&v) } else { render::json(&v, false) });
        }
        Command::Family(f) => {
            let g: FrakTComponent = f.component.parse()?;
            if f.s2_min > f.s2_max {
                return Err(Failure::Usage("--s2-min must not exceed --s2-max".into()));
            }
            let s2 = sample_s2_values(cli.seed, cli.samples.unwrap_or(10), f.s2_min, f.s2_max);
            let points = family_scan(g, &s2, &cfg);
            let verified = points.iter().filter(|p| p.outcome.iso_residual().is_some()).count();
            let hits = points.iter().filter(|p| p.outcome.iso_residual().is_some_and(|r| r < 1e-6)).count();
            let equal = points.iter().filter(|p| matches!(p.outcome, PointOutcome::Verified { j_equal: true, .. })).count();
            let summary = emit(json!({"summary": {
                "component": g, "seed": cli.seed, "s2_values": s2.len(), "points": points.len(),
                "verified": verified, "dropouts": points.len() - verified,
                "on_isomorphic_subfield_conditions": hits, "j_equal": equal,
            }}));
            if cli.pretty {
                out!("{}", render::family(&points));
                outln!("{}", render::json(&summary, true));
            } else {
                for p in &points {
                    outln!("{}", render::json(&to_value(p), false));
                }
                outln!("{}", render::json(&summary, false));
            }
        }
        Command::Verify(v) => {
            let suite = v.suite.parse()?;
            let vc = VerifyConfig { seed: cli.seed, samples: cli.samples, oracle: cfg.clone() };
            let report = run_suite(suite, &vc);
            let out = emit(to_value(&report));
            outln!("{}", if cli.pretty { render::verify(&report) } else { render::json(&out, false) });
            if !report.ok {
                return Err(Failure::Verify);
            }
        }
        Command::Oracle(op) => {
            let v = emit(oracle(op, &cfg)?);
            outln!("{}", render::json(&v, cli.pretty));
        }
    }
    Ok(())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

enum Input {
    Curve(Rational, Rational, Rational),
    Moduli(DihedralPoint),
}

impl CurveArgs {
    fn input(&self) -> Result<Input, Failure> {
        let abc = [&self.a, &self.b, &self.c];
        let s = [&self.s2, &self.s3, &self.s4];
        let n_abc = abc.iter().filter(|x| x.is_some()).count();
        let n_s = s.iter().filter(|x| x.is_some()).count();
        match (n_abc, n_s) {
            (3, 0) => Ok(Input::Curve(
                self.a.clone().unwrap(),
                self.b.clone().unwrap(),
                self.c.clone().unwrap(),
            )),
            (0, 3) => Ok(Input::Moduli(DihedralPoint::new(
                self.s2.clone().unwrap(),
                self.s3.clone().unwrap(),
                self.s4.clone().unwrap(),
            ))),
            _ => Err(Failure::Usage("give either all of --a --b --c or all of --s2 --s3 --s4".into())),
        }
    }
}

impl SexticArgs {
    fn curve(&self) -> Result<Genus2Curve, Failure> {
        let abc = [&self.abc.a, &self.abc.b, &self.abc.c].iter().any(|x| x.is_some());
        let uv = self.u.is_some() || self.v.is_some();
        let moduli = [&self.abc.s2, &self.abc.s3, &self.abc.s4].iter().any(|x| x.is_some());
        if moduli || [self.coeffs.is_some(), uv, abc].iter().filter(|&&g| g).count() != 1 {
            return Err(Failure::Usage("give exactly one of --coeffs, --u with --v, or --a --b --c".into()));
        }
        if let Some(c) = &self.coeffs {
            return Ok(Genus2Curve::new(UniPoly::new(parse_list(c)?))?);
        }
        if uv {
            let (Some(u), Some(v)) = (&self.u, &self.v) else {
                return Err(Failure::Usage("--u and --v go together".into()));
            };
            return Ok(genus2_from_uv(&UVPoint::new(u.clone(), v.clone()))?);
        }
        match self.abc.input()? {
            Input::Curve(a, b, c) => Ok(subcovers(&make_genus3(a, b, c)?).1),
            Input::Moduli(_) => unreachable!("moduli input rejected above"),
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|e| Failure::Usage(format!("coefficient {t:?}: {e}"))))
        .collect()
}

fn oracle(op: &OracleOp, cfg: &OracleConfig) -> Result<Value, Failure> {
    Ok(match op {
        OracleOp::Roots { coeffs } => {
            let f = UniPoly::new(parse_list(coeffs)?);
            json!({"op": "roots", "precision_bits": cfg.precision_bits, "roots": roots(&f, cfg)?})
        }
        OracleOp::Involution(s) => {
            let c = s.curve()?;
            json!({"op": "involution", "curve": c, "witness": detect_involution(&c, cfg)?})
        }
        OracleOp::NormalForm(s) => {
            let c = s.curve()?;
            let w = detect_involution(&c, cfg)?.ok_or(Error::NoInvolution)?;
            json!({"op": "normal-form", "curve": c, "normal_form": v4_normal_form(&c, &w, cfg)?})
        }
        OracleOp::Uv(s) => {
            let c = s.curve()?;
            let n = uv_numeric(&c, cfg)?;
            json!({"op": "uv", "curve": c, "provenance": "numeric", "u": n.u, "v": n.v,
                   "residual": n.residual, "convention": n.convention})
        }
        OracleOp::Js(s) => {
            let c = s.curve()?;
            let n = uv_numeric(&c, cfg)?;
            json!({"op": "js", "curve": c, "js": subcover_js(&c, &n.witness, cfg)?, "residual": n.residual})
        }
        OracleOp::Igusa(s) => {
            let c = s.curve()?;
            json!({"op": "igusa", "curve": c, "invariants": igusa_invariants(&c, cfg)?})
        }
    })
}
