//! Output formats: plain text, LaTeX and JSON (with a parser for the JSON
//! round trip).
//!
//! All three renderers walk the terms in canonical descending order, so the
//! leading Eisenstein part comes first and the pure `pi^k/tau^k` constant
//! comes last, matching the usual way these closed forms are written.  The
//! JSON form is the only machine-readable one: coefficients are exact
//! rational strings (never floats) and parsing followed by re-rendering is
//! byte-identical.

use std::fmt;
use std::str::FromStr;

use num::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::exact::Rational;
use crate::ring::{ClosedFormValue, Monomial, RingElement};
use crate::Error;

/// Output format selector shared by all CLI verbs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Format::Text),
            "latex" => Ok(Format::Latex),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format {other:?} (expected text, latex or json)")),
        }
    }
}

fn pow_text(sym: &str, e: i64) -> String {
    debug_assert!(e > 0);
    if e == 1 {
        sym.to_string()
    } else {
        format!("{sym}^{e}")
    }
}

fn pow_latex(sym: &str, e: i64) -> String {
    debug_assert!(e > 0);
    if e == 1 {
        sym.to_string()
    } else if e < 10 {
        format!("{sym}^{e}")
    } else {
        format!("{sym}^{{{e}}}")
    }
}

/// `2` for integers, `(2/3)` for proper fractions; `None` when the factor
/// would be an invisible `1`.
fn coeff_text(mag: &Rational) -> Option<String> {
    if mag.is_one() {
        None
    } else if mag.is_integer() {
        Some(mag.numer().to_string())
    } else {
        Some(format!("({mag})"))
    }
}

fn ring_term_text(m: &Monomial, mag: &Rational) -> String {
    let mut num: Vec<String> = Vec::new();
    if let Some(c) = coeff_text(mag) {
        num.push(c);
    }
    if m.a > 0 {
        num.push(pow_text("pi", 2 * m.a as i64));
    }
    if m.b > 0 {
        num.push(pow_text("tau", 2 * m.b as i64));
    }
    let mut dens: Vec<String> = Vec::new();
    if m.a < 0 {
        dens.push(pow_text("pi", -2 * m.a as i64));
    }
    if m.b < 0 {
        dens.push(pow_text("tau", -2 * m.b as i64));
    }
    let mut gs: Vec<String> = Vec::new();
    if m.c > 0 {
        gs.push(pow_text("G2", m.c as i64));
    }
    if m.d > 0 {
        gs.push(pow_text("G4", m.d as i64));
    }
    if m.e > 0 {
        gs.push(pow_text("G6", m.e as i64));
    }

    let mut s = if num.is_empty() {
        if gs.is_empty() {
            "1".to_string()
        } else {
            // Pull the G factors forward so a bare `G4/pi^2` never renders
            // as `1/pi^2*G4`.
            let joined = gs.join("*");
            gs.clear();
            joined
        }
    } else {
        num.join("*")
    };
    for d in &dens {
        s.push('/');
        s.push_str(d);
    }
    for g in &gs {
        s.push('*');
        s.push_str(g);
    }
    s
}

fn g_factors_latex(m: &Monomial) -> String {
    let mut s = String::new();
    if m.c > 0 {
        s.push_str(&pow_latex("G_2(\\tau)", m.c as i64));
    }
    if m.d > 0 {
        s.push_str(&pow_latex("G_4(\\tau)", m.d as i64));
    }
    if m.e > 0 {
        s.push_str(&pow_latex("G_6(\\tau)", m.e as i64));
    }
    s
}

fn ring_term_latex(m: &Monomial, mag: &Rational) -> String {
    let mut num_syms = String::new();
    if m.a > 0 {
        num_syms.push_str(&pow_latex("\\pi", 2 * m.a as i64));
    }
    if m.b > 0 {
        num_syms.push_str(&pow_latex("\\tau", 2 * m.b as i64));
    }
    let mut den_syms = String::new();
    if m.a < 0 {
        den_syms.push_str(&pow_latex("\\pi", -2 * m.a as i64));
    }
    if m.b < 0 {
        den_syms.push_str(&pow_latex("\\tau", -2 * m.b as i64));
    }
    let gs = g_factors_latex(m);

    let n = mag.numer();
    let d = mag.denom();
    let mut num = if num::One::is_one(n) && !num_syms.is_empty() {
        String::new()
    } else {
        n.to_string()
    };
    num.push_str(&num_syms);

    let core = if num::One::is_one(d) && den_syms.is_empty() {
        num
    } else {
        let mut den = if num::One::is_one(d) && !den_syms.is_empty() {
            String::new()
        } else {
            d.to_string()
        };
        den.push_str(&den_syms);
        format!("\\frac{{{num}}}{{{den}}}")
    };

    if core == "1" && !gs.is_empty() {
        gs
    } else {
        format!("{core}{gs}")
    }
}

fn join_terms(parts: Vec<(bool, String)>, spaced: bool) -> String {
    let mut out = String::new();
    for (i, (neg, term)) in parts.into_iter().enumerate() {
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else if spaced {
            out.push_str(if neg { " - " } else { " + " });
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        out.push_str(&term);
    }
    out
}

/// Plain-text form, e.g. `G4 + (2/3)*pi^2/tau^2*G2 - (2/15)*pi^4/tau^4`.
pub fn ring_text(x: &RingElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let parts = x
        .terms_desc()
        .map(|(m, q)| (q.is_negative(), ring_term_text(m, &q.abs())))
        .collect();
    join_terms(parts, true)
}

/// LaTeX form, e.g. `G_4(\tau)+\frac{2\pi^2}{3\tau^2}G_2(\tau)-\frac{2\pi^4}{15\tau^4}`.
pub fn ring_latex(x: &RingElement) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let parts = x
        .terms_desc()
        .map(|(m, q)| (q.is_negative(), ring_term_latex(m, &q.abs())))
        .collect();
    join_terms(parts, false)
}

fn closed_term_text(x: i32, y: u32, mag: &Rational) -> String {
    let mut num: Vec<String> = Vec::new();
    if let Some(c) = coeff_text(mag) {
        num.push(c);
    }
    if y > 0 {
        num.push(pow_text("varpi", y as i64));
    }
    if x > 0 {
        num.push(pow_text("pi", x as i64));
    }
    let mut s = if num.is_empty() { "1".to_string() } else { num.join("*") };
    if x < 0 {
        s.push('/');
        s.push_str(&pow_text("pi", -x as i64));
    }
    s
}

fn closed_term_latex(x: i32, y: u32, mag: &Rational) -> String {
    let mut num_syms = String::new();
    if y > 0 {
        num_syms.push_str(&pow_latex("\\varpi", y as i64));
    }
    if x > 0 {
        num_syms.push_str(&pow_latex("\\pi", x as i64));
    }
    let mut den_syms = String::new();
    if x < 0 {
        den_syms.push_str(&pow_latex("\\pi", -x as i64));
    }

    let n = mag.numer();
    let d = mag.denom();
    let mut num = if num::One::is_one(n) && !num_syms.is_empty() {
        String::new()
    } else {
        n.to_string()
    };
    num.push_str(&num_syms);

    if num::One::is_one(d) && den_syms.is_empty() {
        num
    } else {
        let mut den = if num::One::is_one(d) && !den_syms.is_empty() {
            String::new()
        } else {
            d.to_string()
        };
        den.push_str(&den_syms);
        format!("\\frac{{{num}}}{{{den}}}")
    }
}

/// Plain-text form of a specialized value, e.g.
/// `(1/15)*varpi^4 - (2/15)*pi^4 + (2/3)*pi^3`.
pub fn closed_text(v: &ClosedFormValue) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let parts = v
        .iter_desc()
        .map(|(x, y, q)| (q.is_negative(), closed_term_text(x, y, &q.abs())))
        .collect();
    join_terms(parts, true)
}

/// LaTeX form of a specialized value, e.g.
/// `\frac{\varpi^4}{15}-\frac{2\pi^4}{15}+\frac{2\pi^3}{3}`.
pub fn closed_latex(v: &ClosedFormValue) -> String {
    if v.is_zero() {
        return "0".to_string();
    }
    let parts = v
        .iter_desc()
        .map(|(x, y, q)| (q.is_negative(), closed_term_latex(x, y, &q.abs())))
        .collect();
    join_terms(parts, false)
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    pi2: i32,
    tau2: i32,
    g2: u32,
    g4: u32,
    g6: u32,
}

#[derive(Serialize, Deserialize)]
struct RingJson {
    family: String,
    indices: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    power: Option<i64>,
    terms: Vec<TermJson>,
}

/// A ring element recovered from its JSON rendering, together with the
/// metadata that was stored alongside it.
pub struct ParsedRing {
    pub family: String,
    pub indices: Vec<i64>,
    pub power: Option<i64>,
    pub element: RingElement,
}

/// JSON form: `{"family","indices","terms":[{"coeff","pi2","tau2","g2","g4","g6"}]}`
/// with terms in canonical descending order.  `power` is added only for the
/// hyperbolic family, whose series carries the extra kernel exponent.
pub fn ring_json(family: &str, indices: &[i64], power: Option<i64>, x: &RingElement) -> String {
    let terms = x
        .terms_desc()
        .map(|(m, q)| TermJson {
            coeff: q.to_string(),
            pi2: m.a,
            tau2: m.b,
            g2: m.c,
            g4: m.d,
            g6: m.e,
        })
        .collect();
    let doc = RingJson {
        family: family.to_string(),
        indices: indices.to_vec(),
        power,
        terms,
    };
    serde_json::to_string_pretty(&doc).expect("ring serialization cannot fail")
}

/// Inverse of [`ring_json`]; rendering the result again is byte-identical.
pub fn ring_from_json(s: &str) -> Result<ParsedRing, Error> {
    let doc: RingJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let mut element = RingElement::zero();
    for t in &doc.terms {
        let coeff = Rational::from_str(&t.coeff)
            .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coeff)))?;
        element.add_term(Monomial::new(t.pi2, t.tau2, t.g2, t.g4, t.g6), coeff);
    }
    Ok(ParsedRing {
        family: doc.family,
        indices: doc.indices,
        power: doc.power,
        element,
    })
}

#[derive(Serialize, Deserialize)]
struct ValueTermJson {
    coeff: String,
    pi: i32,
    varpi: u32,
}

#[derive(Serialize, Deserialize)]
struct ValueJson {
    family: String,
    indices: Vec<i64>,
    point: String,
    terms: Vec<ValueTermJson>,
}

/// A specialized value recovered from its JSON rendering.
pub struct ParsedValue {
    pub family: String,
    pub indices: Vec<i64>,
    pub point: String,
    pub value: ClosedFormValue,
}

/// JSON form of a specialized value; `pi` and `varpi` are plain exponents.
pub fn closed_json(family: &str, indices: &[i64], point: &str, v: &ClosedFormValue) -> String {
    let terms = v
        .iter_desc()
        .map(|(x, y, q)| ValueTermJson {
            coeff: q.to_string(),
            pi: x,
            varpi: y,
        })
        .collect();
    let doc = ValueJson {
        family: family.to_string(),
        indices: indices.to_vec(),
        point: point.to_string(),
        terms,
    };
    serde_json::to_string_pretty(&doc).expect("value serialization cannot fail")
}

/// Inverse of [`closed_json`].
pub fn closed_from_json(s: &str) -> Result<ParsedValue, Error> {
    let doc: ValueJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let mut value = ClosedFormValue::zero();
    for t in &doc.terms {
        let coeff = Rational::from_str(&t.coeff)
            .map_err(|e| Error::Parse(format!("bad coefficient {:?}: {e}", t.coeff)))?;
        value.add_term(t.pi, t.varpi, coeff);
    }
    Ok(ParsedValue {
        family: doc.family,
        indices: doc.indices,
        point: doc.point,
        value,
    })
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&ring_text(self))
    }
}

impl fmt::Display for ClosedFormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&closed_text(self))
    }
}
