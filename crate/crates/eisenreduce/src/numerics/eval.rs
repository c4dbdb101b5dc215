//! Numeric evaluation of Eisenstein series (q-expansions), of the inner
//! one-dimensional lattice sums (cotangent closed forms), and of exact ring
//! elements and π/ϖ-values at concrete points.

use std::collections::BTreeMap;

use astro_float::BigFloat;
use num::bigint::BigInt;
use num::Zero;

use super::complex::{cot, ComplexValue};
use super::consts::{lemniscate_constant, to_f64, Precision};
use crate::exact::{rat, zeta_even_coeff, Rational};
use crate::ring::{ClosedFormValue, RingElement};
use crate::Error;

/// `σ_k(n) = Σ_{d|n} d^k` by trial division.
pub fn divisor_sigma(n: u64, k: u32) -> BigInt {
    assert!(n >= 1);
    let mut acc = BigInt::zero();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += BigInt::from(d).pow(k);
            let e = n / d;
            if e != d {
                acc += BigInt::from(e).pow(k);
            }
        }
        d += 1;
    }
    acc
}

pub(super) fn check_upper_half(tau: &ComplexValue) -> Result<(), Error> {
    if tau.im.is_zero() || tau.im.is_negative() || tau.im.is_nan() || tau.re.is_nan() {
        return Err(Error::NotInUpperHalfPlane(format!(
            "Im tau = {}",
            to_f64(&tau.im)
        )));
    }
    Ok(())
}

/// Numeric `G_{2k}(τ)` via the q-expansion, `q = e^{2πiτ}`.
///
/// For `k ≥ 2` the series is absolutely convergent and
///
/// ```text
/// G_{2k}(τ) = 2ζ(2k) + (-1)^k·2·(2π)^{2k}/(2k-1)! · Σ_{n≥1} σ_{2k-1}(n)·qⁿ.
/// ```
///
/// For `k = 1` the double series is summed in the fixed iterated order
/// (`m` outermost), which shifts the standard quasi-modular expansion by
/// `-2πi/τ`:
///
/// ```text
/// G_2(τ) = π²/3 - 8π²·Σ_{n≥1} σ_1(n)·qⁿ - 2πi/τ,
/// ```
///
/// so that, e.g., `G_2(i) = -π` exactly.
#[allow(non_snake_case)]
pub fn eval_G(
    k: u32,
    tau: &ComplexValue,
    terms: u32,
    px: &Precision,
) -> Result<ComplexValue, Error> {
    assert!(k >= 1, "the series index is 2k with k >= 1");
    check_upper_half(tau)?;
    let pi = px.pi();

    // q = e^{2πiτ}; |q| = e^{-2π·Im τ} < 1.
    let two_pi = px.mul(&pi, &px.from_i64(2));
    let q = ComplexValue::new(
        px.mul(&two_pi.neg(), &tau.im),
        px.mul(&two_pi, &tau.re),
    )
    .exp(px);

    let mut sigma_sum = ComplexValue::zero(px);
    let mut qn = q.clone();
    for n in 1..=u64::from(terms) {
        let sig = px.from_bigint(&divisor_sigma(n, 2 * k - 1));
        sigma_sum = sigma_sum.add(&qn.scale(&sig, px), px);
        if n < u64::from(terms) {
            qn = qn.mul(&q, px);
        }
    }

    if k == 1 {
        // π²/3 - 8π²·Σ - 2πi/τ
        let pi2 = px.mul(&pi, &pi);
        let mut v = ComplexValue::real(px.div(&pi2, &px.from_i64(3)), px);
        v = v.sub(&sigma_sum.scale(&px.mul(&pi2, &px.from_i64(8)), px), px);
        let two_pi_i = ComplexValue::new(px.from_i64(0), two_pi);
        v = v.sub(&two_pi_i.div(tau, px), px);
        Ok(v)
    } else {
        // 2ζ(2k) is a rational multiple of π^{2k}.
        let zeta_part = px.mul(
            &px.from_rational(&(zeta_even_coeff(k) * rat(2, 1))),
            &px.powi(&pi, 2 * i64::from(k)),
        );
        // (-1)^k·2/(2k-1)! · (2π)^{2k}
        let front_rat = rat(if k % 2 == 0 { 2 } else { -2 }, 1)
            / Rational::from(crate::exact::factorial(2 * k - 1));
        let front = px.mul(
            &px.from_rational(&front_rat),
            &px.powi(&two_pi, 2 * i64::from(k)),
        );
        Ok(ComplexValue::real(zeta_part, px).add(&sigma_sum.scale(&front, px), px))
    }
}

/// Coefficients (ascending, exact) of the polynomial `Q_s` with
/// `Σ_{l∈ℤ} (z+l)^{-s} = π^s·Q_s(cot πz)`: starting from `Q_1(u) = u`,
/// differentiating the sum term by term gives `Q_{s+1} = (1+u²)·Q_s'/s`.
pub(super) fn cot_sum_poly(s: u32) -> Vec<Rational> {
    assert!(s >= 1);
    let mut q = vec![Rational::zero(), Rational::from(BigInt::from(1))];
    for k in 1..s {
        let mut dq = vec![Rational::zero(); q.len().saturating_sub(1)];
        for (i, c) in q.iter().enumerate().skip(1) {
            dq[i - 1] = c * rat(i as i64, 1);
        }
        let mut nq = vec![Rational::zero(); dq.len() + 2];
        for (i, c) in dq.iter().enumerate() {
            let w = c / rat(i64::from(k), 1);
            nq[i] += &w;
            nq[i + 2] += w;
        }
        q = nq;
    }
    q
}

/// Evaluate exact polynomial coefficients at a complex point (Horner).
pub(super) fn eval_poly(
    coeffs: &[BigFloat],
    u: &ComplexValue,
    px: &Precision,
) -> ComplexValue {
    let mut acc = ComplexValue::zero(px);
    for c in coeffs.iter().rev() {
        acc = acc.mul(u, px);
        acc = acc.add(&ComplexValue::real(c.clone(), px), px);
    }
    acc
}

pub(super) fn poly_to_floats(coeffs: &[Rational], px: &Precision) -> Vec<BigFloat> {
    coeffs.iter().map(|c| px.from_rational(c)).collect()
}

/// The inner one-dimensional lattice sum in closed form:
///
/// ```text
/// Σ_{l∈ℤ} (m + lτ)^{-2p} = (π/τ)^{2p} · Q_{2p}(cot(πm/τ)),   m ≠ 0.
/// ```
///
/// Despite the harmless-looking `l = 0` term `m^{-2p}`, the whole sum is
/// exponentially small in `|m|`: massive cancellation against the tail.
pub fn inner_sum(
    p: u32,
    m: i64,
    tau: &ComplexValue,
    px: &Precision,
) -> Result<ComplexValue, Error> {
    assert!(p >= 1);
    if m == 0 {
        return Err(Error::ZeroRow);
    }
    check_upper_half(tau)?;
    let coeffs = poly_to_floats(&cot_sum_poly(2 * p), px);
    let pi_c = ComplexValue::real(px.pi(), px);
    let w = pi_c.scale(&px.from_i64(m), px).div(tau, px);
    let u = cot(&w, px).ok_or(Error::PoleEncountered { m, n: 0 })?;
    let front = pi_c.div(tau, px).powi(2 * i64::from(p), px);
    Ok(eval_poly(&coeffs, &u, px).mul(&front, px))
}

/// Evaluate an exact ring element at a concrete `τ`, resolving `G_2, G_4,
/// G_6` through their q-expansions with `terms` summands each.
pub fn eval_ring_element(
    x: &RingElement,
    tau: &ComplexValue,
    terms: u32,
    px: &Precision,
) -> Result<ComplexValue, Error> {
    check_upper_half(tau)?;
    let mut g_cache: BTreeMap<u32, ComplexValue> = BTreeMap::new();
    let pi_c = ComplexValue::real(px.pi(), px);
    let mut acc = ComplexValue::zero(px);
    for (m, coeff) in x.iter() {
        let mut t = ComplexValue::real(px.from_rational(coeff), px);
        if m.a != 0 {
            t = t.mul(&pi_c.powi(2 * i64::from(m.a), px), px);
        }
        if m.b != 0 {
            t = t.mul(&tau.powi(2 * i64::from(m.b), px), px);
        }
        for (k, e) in [(1u32, m.c), (2, m.d), (3, m.e)] {
            if e == 0 {
                continue;
            }
            if !g_cache.contains_key(&k) {
                let g = eval_G(k, tau, terms, px)?;
                g_cache.insert(k, g);
            }
            t = t.mul(&g_cache[&k].powi(i64::from(e), px), px);
        }
        acc = acc.add(&t, px);
    }
    Ok(acc)
}

/// Evaluate an exact `π`/`ϖ`-combination to a real number.
pub fn eval_closed_form(v: &ClosedFormValue, px: &Precision) -> BigFloat {
    let pi = px.pi();
    let w = lemniscate_constant(px.bits());
    let mut acc = px.from_i64(0);
    for (x, y, coeff) in v.iter_desc() {
        let mut t = px.from_rational(coeff);
        if x != 0 {
            t = px.mul(&t, &px.powi(&pi, i64::from(x)));
        }
        if y != 0 {
            t = px.mul(&t, &px.powi(&w, i64::from(y)));
        }
        acc = px.add(&acc, &t);
    }
    acc
}
