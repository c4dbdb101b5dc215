//! Command-line front end.
//!
//! Exit codes are a stable contract: `0` on success, `2` on usage or domain
//! errors (odd indices, a point below the real axis, malformed flags), `3`
//! when a numeric verification fails — the `oracle` and `verify` verbs treat
//! a symbolic/numeric mismatch as an error state, not as printable output.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::hyperbolic::{cauchy_closed_form, coth_reduce, CothIndex};
use crate::numerics::{
    bigfloat_decimal, eval_closed_form, eval_ring_element, eval_G, oracle_gtilde, ComplexValue,
    Precision,
};
use crate::reduce::{reduce_multi, Family, IndexTuple};
use crate::render::{self, Format};
use crate::ring::RingElement;
use crate::Error;

/// Oracle agreement threshold: beyond this relative difference the dual
/// pipeline is considered broken and the process exits with status 3.
const ORACLE_REL_TOL: f64 = 1e-6;

/// Significant digits for exact-value decimals.
const VALUE_DIGITS: usize = 30;

/// Significant digits for oracle/series decimals (the comparisons behind
/// them are done at full working precision, this only trims the display).
const REPORT_DIGITS: usize = 20;

#[derive(Parser)]
#[command(
    name = "eisenreduce",
    version,
    about = "Exact closed forms for multiple Eisenstein-type series, with numeric cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a multiple series to a polynomial in G2, G4, G6 over Q[pi^2, tau^-2]
    Reduce(ReduceArgs),
    /// Exact value at tau = i in Q[pi, varpi], with a 30-digit decimal
    Value(ValueArgs),
    /// Compare the symbolic closed form against a direct lattice summation
    Oracle(OracleArgs),
    /// Closed form of a coth-power weighted multiple series
    Coth(CothArgs),
    /// Closed form of the classical odd-weight coth sum
    Cauchy(CauchyArgs),
    /// Numeric value of a classical Eisenstein series from its q-expansion
    Eisenstein(EisensteinArgs),
    /// Sweep every index tuple in a range through both pipelines
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ReduceArgs {
    /// Comma-separated even exponents, e.g. 2,4,2
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    indices: Vec<i64>,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValueArgs {
    /// Comma-separated even exponents, e.g. 2,4
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    indices: Vec<i64>,
    /// Specialization point; only "i" has an exact closed form
    #[arg(long, default_value = "i")]
    at: String,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    /// Comma-separated even exponents, e.g. 2,2,2
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    indices: Vec<i64>,
    /// Evaluation point, e.g. "0+2i", "0.5+2i" or "i"
    #[arg(long, default_value = "i", allow_hyphen_values = true)]
    tau: String,
    /// Rows |m| <= mmax of the outer lattice sum
    #[arg(long, default_value_t = 60)]
    mmax: i64,
    /// q-expansion length used on the symbolic side
    #[arg(long, default_value_t = 64)]
    terms: u32,
    /// Output format (text or json)
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
}

#[derive(Args)]
struct CothArgs {
    /// Comma-separated even exponents of the plain factors, e.g. 2,4
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    indices: Vec<i64>,
    /// Even power of the coth kernel attached to the last factor
    #[arg(long, allow_hyphen_values = true)]
    power: i64,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CauchyArgs {
    /// Weight parameter: the sum runs over coth(m*pi)/m^(4p+3)
    #[arg(long)]
    p: u32,
    /// Output format
    #[arg(long, default_value = "text", value_parser = parse_format)]
    format: Format,
    /// Write the rendered output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EisensteinArgs {
    /// Even weight 2k of the series G_{2k}
    #[arg(long, allow_hyphen_values = true)]
    weight: i64,
    /// Evaluation point, e.g. "0+1i"
    #[arg(long, default_value = "i", allow_hyphen_values = true)]
    tau: String,
    /// q-expansion length
    #[arg(long, default_value_t = 64)]
    terms: u32,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest total weight of the swept tuples
    #[arg(long, default_value_t = 12)]
    weight: u32,
    /// Largest tuple depth
    #[arg(long, default_value_t = 4)]
    depth: u32,
    /// Evaluation point shared by the whole sweep
    #[arg(long, default_value = "2i", allow_hyphen_values = true)]
    tau: String,
    /// Rows |m| <= mmax of the outer lattice sum
    #[arg(long, default_value_t = 24)]
    mmax: i64,
    /// q-expansion length used on the symbolic side
    #[arg(long, default_value_t = 64)]
    terms: u32,
}

fn parse_format(s: &str) -> Result<Format, String> {
    Format::from_str(s)
}

/// Parse "a+bi" complex literals: "i", "2i", "0+2i", "0.5+2i", "1-1i",
/// "1/2+2i". A missing imaginary part is rejected later by the
/// upper-half-plane check, not here.
fn parse_complex(s: &str) -> Result<(f64, f64), Error> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("cannot parse complex number {s:?} (expected a+bi)"));
    if t.is_empty() {
        return Err(bad());
    }
    let parse_real = |u: &str| -> Result<f64, Error> {
        if let Some((n, d)) = u.split_once('/') {
            let n: f64 = n.parse().map_err(|_| bad())?;
            let d: f64 = d.parse().map_err(|_| bad())?;
            if d == 0.0 {
                return Err(bad());
            }
            Ok(n / d)
        } else {
            u.parse().map_err(|_| bad())
        }
    };
    if let Some(body) = t.strip_suffix('i') {
        // Split into real and imaginary at the last +/- that is neither
        // leading nor part of a scientific-notation exponent.
        let mut split = None;
        for (idx, ch) in body.char_indices().skip(1) {
            if (ch == '+' || ch == '-')
                && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
            {
                split = Some(idx);
            }
        }
        let (re_str, im_str) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let re = if re_str.is_empty() { 0.0 } else { parse_real(re_str)? };
        let im = match im_str {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => parse_real(other)?,
        };
        Ok((re, im))
    } else {
        Ok((parse_real(&t)?, 0.0))
    }
}

fn upper_half_point(s: &str, px: &Precision) -> Result<ComplexValue, Error> {
    let (re, im) = parse_complex(s)?;
    if !(im > 0.0) {
        return Err(Error::NotInUpperHalfPlane(s.trim().to_string()));
    }
    Ok(ComplexValue::from_f64(re, im, px))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn render_ring(
    format: Format,
    family: &str,
    indices: &[i64],
    power: Option<i64>,
    x: &RingElement,
) -> String {
    match format {
        Format::Text => render::ring_text(x),
        Format::Latex => render::ring_latex(x),
        Format::Json => render::ring_json(family, indices, power, x),
    }
}

fn complex_decimal(v: &ComplexValue, digits: usize) -> String {
    let re = bigfloat_decimal(&v.re, digits);
    let im = bigfloat_decimal(&v.im.abs(), digits);
    let op = if v.im.is_negative() { '-' } else { '+' };
    format!("{re} {op} {im}*i")
}

/// Relative difference of two evaluations; falls back to the absolute
/// difference when both values are numerically indistinguishable from zero.
fn relative_difference(a: &ComplexValue, b: &ComplexValue, px: &Precision) -> (f64, f64) {
    let abs = crate::numerics::to_f64(&a.sub(b, px).abs(px));
    let denom = f64::max(
        crate::numerics::to_f64(&a.abs(px)),
        crate::numerics::to_f64(&b.abs(px)),
    );
    let rel = if denom > 1e-30 { abs / denom } else { abs };
    (abs, rel)
}

/// Ordered tuples of positive halves with total weight ≤ `2*max_half_sum`
/// and depth ≤ `max_depth`, listed by increasing total weight.
fn compositions(max_half_sum: u32, max_depth: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, parts_left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            if !prefix.is_empty() {
                out.push(prefix.clone());
            }
            return;
        }
        if parts_left == 0 {
            return;
        }
        for first in 1..=n {
            prefix.push(first);
            rec(n - first, parts_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 1..=max_half_sum {
        rec(total, max_depth, &mut Vec::new(), &mut out);
    }
    out
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32, Error> {
    match cmd {
        Command::Reduce(a) => cmd_reduce(a),
        Command::Value(a) => cmd_value(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Coth(a) => cmd_coth(a),
        Command::Cauchy(a) => cmd_cauchy(a),
        Command::Eisenstein(a) => cmd_eisenstein(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn cmd_reduce(a: ReduceArgs) -> Result<i32, Error> {
    let t = IndexTuple::from_even_indices(&a.indices, Family::Full)?;
    let x = reduce_multi(&t);
    emit(&a.out, &render_ring(a.format, "full", &a.indices, None, &x))?;
    Ok(0)
}

fn cmd_value(a: ValueArgs) -> Result<i32, Error> {
    if a.at.trim() != "i" {
        return Err(Error::UnsupportedPoint(format!(
            "{} (exact specialization exists only at tau = i; use `oracle` for numeric points)",
            a.at
        )));
    }
    let t = IndexTuple::from_even_indices(&a.indices, Family::Full)?;
    let v = reduce_multi(&t).specialize_i();
    let px = Precision::default();
    let decimal = bigfloat_decimal(&eval_closed_form(&v, &px), VALUE_DIGITS);
    let rendered = match a.format {
        Format::Text => format!("{}\n= {decimal}", render::closed_text(&v)),
        Format::Latex => format!("{}\n= {decimal}", render::closed_latex(&v)),
        Format::Json => render::closed_json("value", &a.indices, "i", &v),
    };
    emit(&a.out, &rendered)?;
    Ok(0)
}

fn cmd_oracle(a: OracleArgs) -> Result<i32, Error> {
    let px = Precision::default();
    let t = IndexTuple::from_even_indices(&a.indices, Family::Full)?;
    let tau = upper_half_point(&a.tau, &px)?;
    let x = reduce_multi(&t);
    let symbolic = eval_ring_element(&x, &tau, a.terms, &px)?;
    let report = oracle_gtilde(&t, &tau, a.mmax, &px)?;
    let (abs, rel) = relative_difference(&symbolic, &report.value, &px);
    let ok = rel <= ORACLE_REL_TOL;

    match a.format {
        Format::Json => {
            let doc = serde_json::json!({
                "family": "full",
                "indices": a.indices,
                "tau": a.tau,
                "mmax": report.truncation,
                "summation_order": report.summation_order,
                "tail_estimate": format!("{:.3e}", report.tail_estimate),
                "symbolic": complex_decimal(&symbolic, REPORT_DIGITS),
                "oracle": complex_decimal(&report.value, REPORT_DIGITS),
                "absolute_difference": format!("{abs:.3e}"),
                "relative_difference": format!("{rel:.3e}"),
                "within_tolerance": ok,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("report serialization"));
        }
        _ => {
            println!("closed form: {}", render::ring_text(&x));
            println!("symbolic value: {}", complex_decimal(&symbolic, REPORT_DIGITS));
            println!(
                "oracle value:   {}   (mmax = {}, tail <= {:.1e})",
                complex_decimal(&report.value, REPORT_DIGITS),
                report.truncation,
                report.tail_estimate
            );
            println!("absolute difference: {abs:.3e}");
            println!("relative difference: {rel:.3e}");
        }
    }
    if ok {
        Ok(0)
    } else {
        eprintln!("verification failed: relative difference {rel:.3e} exceeds {ORACLE_REL_TOL:.0e}");
        Ok(3)
    }
}

fn cmd_coth(a: CothArgs) -> Result<i32, Error> {
    let c = CothIndex::from_even_indices(&a.indices, a.power)?;
    let x = coth_reduce(&c);
    emit(
        &a.out,
        &render_ring(a.format, "coth", &a.indices, Some(a.power), &x),
    )?;
    Ok(0)
}

fn cmd_cauchy(a: CauchyArgs) -> Result<i32, Error> {
    let v = cauchy_closed_form(a.p);
    let px = Precision::default();
    let decimal = bigfloat_decimal(&eval_closed_form(&v, &px), VALUE_DIGITS);
    let rendered = match a.format {
        Format::Text => format!("{}\n= {decimal}", render::closed_text(&v)),
        Format::Latex => format!("{}\n= {decimal}", render::closed_latex(&v)),
        Format::Json => render::closed_json("cauchy", &[a.p as i64], "real", &v),
    };
    emit(&a.out, &rendered)?;
    Ok(0)
}

fn cmd_eisenstein(a: EisensteinArgs) -> Result<i32, Error> {
    if a.weight < 2 || a.weight % 2 != 0 {
        return Err(Error::InvalidIndices(format!(
            "weight must be an even integer >= 2, got {}",
            a.weight
        )));
    }
    let px = Precision::default();
    let tau = upper_half_point(&a.tau, &px)?;
    let value = eval_G((a.weight / 2) as u32, &tau, a.terms, &px)?;
    println!(
        "G_{}({}) = {}   (terms = {})",
        a.weight,
        a.tau.trim(),
        complex_decimal(&value, REPORT_DIGITS),
        a.terms
    );
    Ok(0)
}

fn cmd_verify(a: VerifyArgs) -> Result<i32, Error> {
    if a.weight < 2 {
        return Err(Error::InvalidIndices(format!(
            "sweep weight must be >= 2, got {}",
            a.weight
        )));
    }
    let px = Precision::default();
    let tau = upper_half_point(&a.tau, &px)?;
    let tuples = compositions(a.weight / 2, a.depth);
    let mut failures = 0usize;
    for halves in &tuples {
        let t = IndexTuple::full(halves);
        let x = reduce_multi(&t);
        let symbolic = eval_ring_element(&x, &tau, a.terms, &px)?;
        let report = oracle_gtilde(&t, &tau, a.mmax, &px)?;
        let (_, rel) = relative_difference(&symbolic, &report.value, &px);
        let label = t
            .even_indices()
            .iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let verdict = if rel <= ORACLE_REL_TOL { "ok" } else { "FAIL" };
        println!("{label:<12} weight {:>2}  rel {rel:.3e}  {verdict}", t.weight());
        if rel > ORACLE_REL_TOL {
            failures += 1;
        }
    }
    println!(
        "checked {} tuples at tau = {} (mmax {}): {}",
        tuples.len(),
        a.tau.trim(),
        a.mmax,
        if failures == 0 {
            format!("all within {ORACLE_REL_TOL:.0e}")
        } else {
            format!("{failures} FAILED")
        }
    );
    Ok(if failures == 0 { 0 } else { 3 })
}
