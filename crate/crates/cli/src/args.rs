use clap::{Args, Parser, Subcommand};

use split244::exact::Rational;

#[derive(Parser, Debug)]
#[command(name = "split244", version, about = "Genus-3 curves with split Jacobians: invariants, loci and a numeric oracle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    pub json: bool,
    /// Human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Relative tolerance for root certification.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    /// Working precision of the oracle; overrides SPLIT244_PRECISION_BITS.
    #[arg(long, global = true)]
    pub precision_bits: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
    /// Sample count; for `verify` it overrides every check's default.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Add wall-clock timings to the output (breaks byte-determinism).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Full report for a curve (a, b, c) or a moduli point (s2, s3, s4).
    Analyze(AnalyzeArgs),
    /// Points on a component g1..g5 cut with F1 = 0, checked by the oracle.
    Family(FamilyArgs),
    /// Run a verification suite; exit code 3 if a hard check fails.
    Verify(VerifyArgs),
    /// Raw oracle operations.
    #[command(subcommand)]
    Oracle(OracleOp),
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub curve: CurveArgs,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub s2: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub s3: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub s4: Option<Rational>,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// One of g1..g5.
    #[arg(long)]
    pub component: String,
    #[arg(long, default_value_t = -5, allow_hyphen_values = true)]
    pub s2_min: i64,
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    pub s2_max: i64,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// paper-anchors (the worked example), cross-validation, discriminants, d4, f1-operational,
    /// frak-t, reconstruction, classification, diagnostic or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

/// A genus-2 curve: explicit sextic, a `(u, v)` point, or the quotient of `(a, b, c)`.
#[derive(Args, Debug)]
pub struct SexticArgs {
    /// Ascending coefficients, comma separated, e.g. `0,1,1,1,1,1`.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub u: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    pub v: Option<Rational>,
    #[command(flatten)]
    pub abc: CurveArgs,
}

#[derive(Subcommand, Debug)]
pub enum OracleOp {
    /// Complex roots of a polynomial with rational coefficients.
    Roots {
        /// Ascending coefficients, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Search for an extra involution.
    Involution(SexticArgs),
    /// Normal form y² = x⁶ + Ax⁴ + Bx² + 1.
    NormalForm(SexticArgs),
    /// Numeric (u, v).
    Uv(SexticArgs),
    /// j-invariants of the two elliptic quotients.
    Js(SexticArgs),
    /// Igusa-type and absolute invariants.
    Igusa(SexticArgs),
}
