//! Working precision, conversions between exact and floating data, and the
//! lemniscate constant `ϖ`.

use std::cell::RefCell;

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num::bigint::BigInt;

use crate::exact::Rational;

/// A floating-point working context: precision in bits, rounding mode and a
/// cache of transcendental constants.
///
/// `astro_float` threads precision, rounding and a constants cache through
/// every operation; this type bundles them so numeric code reads naturally.
pub struct Precision {
    bits: usize,
    rm: RoundingMode,
    consts: RefCell<Consts>,
}

impl Precision {
    /// Requires at least 53 bits (f64 width); the oracles default to 128.
    pub fn new(bits: usize) -> Self {
        assert!(bits >= 53, "working precision below f64 is not useful");
        Precision {
            bits,
            rm: RoundingMode::ToEven,
            consts: RefCell::new(Consts::new().expect("constants cache")),
        }
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn pi(&self) -> BigFloat {
        self.consts.borrow_mut().pi(self.bits, self.rm)
    }

    pub fn from_i64(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn from_f64(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.bits)
    }

    /// Exact integer to float (rounded to working precision): fold the
    /// 64-bit limbs most-significant first.
    pub fn from_bigint(&self, n: &BigInt) -> BigFloat {
        let (sign, digits) = n.to_u64_digits();
        let shift = BigFloat::from_u128(1u128 << 64, self.bits);
        let mut acc = BigFloat::from_i8(0, self.bits);
        for d in digits.iter().rev() {
            acc = acc.mul(&shift, self.bits, self.rm);
            acc = acc.add(&BigFloat::from_u64(*d, self.bits), self.bits, self.rm);
        }
        if sign == num::bigint::Sign::Minus {
            acc.neg()
        } else {
            acc
        }
    }

    pub fn from_rational(&self, q: &Rational) -> BigFloat {
        self.from_bigint(q.numer())
            .div(&self.from_bigint(q.denom()), self.bits, self.rm)
    }

    pub fn add(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.add(y, self.bits, self.rm)
    }

    pub fn sub(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.sub(y, self.bits, self.rm)
    }

    pub fn mul(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.mul(y, self.bits, self.rm)
    }

    pub fn div(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.div(y, self.bits, self.rm)
    }

    pub fn recip(&self, x: &BigFloat) -> BigFloat {
        x.reciprocal(self.bits, self.rm)
    }

    pub fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(self.bits, self.rm)
    }

    pub fn exp(&self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, self.rm, &mut self.consts.borrow_mut())
    }

    pub fn sin(&self, x: &BigFloat) -> BigFloat {
        x.sin(self.bits, self.rm, &mut self.consts.borrow_mut())
    }

    pub fn cos(&self, x: &BigFloat) -> BigFloat {
        x.cos(self.bits, self.rm, &mut self.consts.borrow_mut())
    }

    /// `x^n` for any integer `n` (negative through the reciprocal).
    pub fn powi(&self, x: &BigFloat, n: i64) -> BigFloat {
        if n < 0 {
            return self.recip(&self.powi(x, -n));
        }
        if n == 0 {
            return self.from_i64(1);
        }
        x.powi(n as usize, self.bits, self.rm)
    }

    /// Decimal rendering at full working precision.
    pub fn decimal(&self, x: &BigFloat) -> String {
        x.format(Radix::Dec, self.rm, &mut self.consts.borrow_mut())
            .unwrap_or_else(|_| "<not-a-number>".to_string())
    }

    pub fn to_f64(&self, x: &BigFloat) -> f64 {
        to_f64(x)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::new(128)
    }
}

/// Lossy conversion to f64 from the raw mantissa/exponent parts (the crate
/// itself offers no direct route), good to an ulp or two — ample for
/// tolerance checks and display.
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    if x.is_zero() {
        return 0.0;
    }
    let (words, _p, sign, exp, _inexact) = x.as_raw_parts().expect("finite value");
    let len = words.len();
    // value = sign · (Σ words[i]·2^(64i)) · 2^(exp − 64·len); the top two
    // limbs carry more than an f64 mantissa.
    let top = words[len - 1] as f64;
    let next = if len >= 2 { words[len - 2] as f64 } else { 0.0 };
    let mant = top + next / 18446744073709551616.0;
    let v = mant * 2.0f64.powi(exp - 64);
    if sign == Sign::Neg {
        -v
    } else {
        v
    }
}

/// Exact decimal rendering: `digits` significant digits in scientific
/// notation, rounded half away from zero on the decimal expansion. The
/// mantissa·2^exp representation is converted to a rational first, so the
/// printed digits are those of the stored number and not of an f64 shadow
/// of it.
pub fn bigfloat_decimal(x: &BigFloat, digits: usize) -> String {
    assert!(digits >= 1);
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_inf_pos() {
        return "inf".to_string();
    }
    if x.is_inf_neg() {
        return "-inf".to_string();
    }
    if x.is_zero() {
        return "0".to_string();
    }
    let (words, _p, sign, exp, _inexact) = x.as_raw_parts().expect("finite value");
    let mut mant = BigInt::from(0u32);
    for w in words.iter().rev() {
        mant = (mant << 64) + BigInt::from(*w);
    }
    let shift = exp as i64 - 64 * words.len() as i64;
    let mut q = Rational::from(mant);
    if shift >= 0 {
        q *= Rational::from(BigInt::from(1u32) << shift as usize);
    } else {
        q /= Rational::from(BigInt::from(1u32) << (-shift) as usize);
    }

    let ten = |k: i64| -> Rational {
        let p = BigInt::from(10u32).pow(k.unsigned_abs() as u32);
        if k >= 0 {
            Rational::from(p)
        } else {
            Rational::new(BigInt::from(1u32), p)
        }
    };
    // Decimal exponent e with 10^e <= q < 10^(e+1), starting from the
    // digit-length guess and correcting by comparison.
    let mut e = q.numer().to_string().len() as i64 - q.denom().to_string().len() as i64;
    while ten(e) > q {
        e -= 1;
    }
    while ten(e + 1) <= q {
        e += 1;
    }
    let scaled = &q * ten(digits as i64 - 1 - e);
    let rounded = (scaled + Rational::new(BigInt::from(1u32), BigInt::from(2u32)))
        .floor()
        .to_integer();
    let mut ds = rounded.to_string();
    if ds.len() > digits {
        // Rounding carried past the leading digit (e.g. 999.96 -> 1000).
        ds.truncate(digits);
        e += 1;
    }
    let sign_str = if sign == Sign::Neg { "-" } else { "" };
    let exp_str = format!("e{}{}", if e >= 0 { "+" } else { "-" }, e.abs());
    if ds.len() == 1 {
        format!("{sign_str}{ds}{exp_str}")
    } else {
        format!("{sign_str}{}.{}{exp_str}", &ds[..1], &ds[1..])
    }
}

/// The lemniscate constant `ϖ = 2.62205755…`, computed through the
/// arithmetic–geometric mean: `ϖ = π / agm(1, √2)`.
pub fn lemniscate_constant(bits: usize) -> BigFloat {
    assert!(bits >= 53);
    let work = bits + 64;
    let px = Precision::new(work);
    let mut a = px.from_i64(1);
    let mut b = px.sqrt(&px.from_i64(2));
    // Quadratic convergence: correct bits double per step, so
    // ceil(log2(work)) + 2 steps close the gap from ~1 bit.
    let steps = (usize::BITS - work.leading_zeros()) + 2;
    let half = px.from_f64(0.5);
    for _ in 0..steps {
        let am = px.mul(&px.add(&a, &b), &half);
        let gm = px.sqrt(&px.mul(&a, &b));
        a = am;
        b = gm;
    }
    let v = px.div(&px.pi(), &a);
    // Shed the guard bits.
    v.add(&BigFloat::from_i8(0, bits), bits, RoundingMode::ToEven)
}

/// The same constant as the arc-length integral `2∫₀¹ dx/√(1-x⁴)`,
/// evaluated by tanh-sinh quadrature. Exists purely as an independent
/// cross-check of [`lemniscate_constant`]; the two routes share no code
/// beyond basic arithmetic.
pub fn lemniscate_integral(bits: usize) -> BigFloat {
    assert!(bits >= 53);
    let work = bits + 64;
    let px = Precision::new(work);

    // Substitute x = (1 + tanh s)/2 with s = (π/2)·sinh t, pushing both
    // endpoints to infinity; the integrand's x → 1 singularity is absorbed
    // by the doubly-exponential decay. Near x = 1 the difference 1 - x =
    // 1/(e^{2s} + 1) is formed directly from the exponential — no
    // cancellation against 1.
    let one = px.from_i64(1);
    let two = px.from_i64(2);
    let quarter_pi = px.mul(&px.pi(), &px.from_f64(0.25));

    // Step 1/32 and |t| ≤ 6.25 give ~120 decimal digits, far beyond any
    // requested precision here (the ledgered budget is bits ≤ 256 + guard).
    let h = px.from_f64(1.0 / 32.0);
    let n_steps = 200i64;

    let mut total = BigFloat::from_i8(0, work);
    for k in -n_steps..=n_steps {
        let t = px.mul(&h, &px.from_i64(k));
        let et = px.exp(&t);
        let sinh_t = px.mul(&px.sub(&et, &px.recip(&et)), &px.from_f64(0.5));
        let cosh_t = px.mul(&px.add(&et, &px.recip(&et)), &px.from_f64(0.5));
        // s = (π/2)·sinh t; work with e^{2s} throughout.
        let e2s = px.exp(&px.mul(&px.pi(), &sinh_t));
        let e2s1 = px.add(&e2s, &one);
        let one_minus_x = px.recip(&e2s1);
        let x = px.sub(&one, &one_minus_x);
        let one_plus_x = px.add(&one, &x);
        let one_plus_x2 = px.add(&one, &px.mul(&x, &x));
        // dx/dt = (π/4)·cosh t / cosh² s, and cosh² s = (e^{2s}+2+e^{-2s})/4.
        let cosh2_s = px.mul(
            &px.add(&px.add(&e2s, &two), &px.recip(&e2s)),
            &px.from_f64(0.25),
        );
        let dx_dt = px.div(&px.mul(&quarter_pi, &cosh_t), &cosh2_s);
        let radicand = px.mul(&px.mul(&one_minus_x, &one_plus_x), &one_plus_x2);
        total = px.add(&total, &px.div(&dx_dt, &px.sqrt(&radicand)));
    }
    let v = px.mul(&px.mul(&total, &h), &two);
    v.add(&BigFloat::from_i8(0, bits), bits, RoundingMode::ToEven)
}
