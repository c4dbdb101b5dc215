//! Complex arithmetic over `BigFloat`, plus the two kernels the oracles
//! need: cotangent and hyperbolic cotangent at complex arguments.

use astro_float::BigFloat;

use super::consts::{to_f64, Precision};

/// A complex number with arbitrary-precision parts.
#[derive(Clone, Debug)]
pub struct ComplexValue {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl ComplexValue {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        ComplexValue { re, im }
    }

    pub fn from_f64(re: f64, im: f64, px: &Precision) -> Self {
        ComplexValue::new(px.from_f64(re), px.from_f64(im))
    }

    pub fn zero(px: &Precision) -> Self {
        ComplexValue::from_f64(0.0, 0.0, px)
    }

    pub fn real(x: BigFloat, px: &Precision) -> Self {
        ComplexValue::new(x, px.from_i64(0))
    }

    pub fn add(&self, o: &ComplexValue, px: &Precision) -> Self {
        ComplexValue::new(px.add(&self.re, &o.re), px.add(&self.im, &o.im))
    }

    pub fn sub(&self, o: &ComplexValue, px: &Precision) -> Self {
        ComplexValue::new(px.sub(&self.re, &o.re), px.sub(&self.im, &o.im))
    }

    pub fn neg(&self) -> Self {
        ComplexValue::new(self.re.neg(), self.im.neg())
    }

    pub fn mul(&self, o: &ComplexValue, px: &Precision) -> Self {
        let re = px.sub(&px.mul(&self.re, &o.re), &px.mul(&self.im, &o.im));
        let im = px.add(&px.mul(&self.re, &o.im), &px.mul(&self.im, &o.re));
        ComplexValue::new(re, im)
    }

    /// Multiply by a real scalar.
    pub fn scale(&self, s: &BigFloat, px: &Precision) -> Self {
        ComplexValue::new(px.mul(&self.re, s), px.mul(&self.im, s))
    }

    /// `|self|²` — exact up to rounding, no square root.
    pub fn abs2(&self, px: &Precision) -> BigFloat {
        px.add(
            &px.mul(&self.re, &self.re),
            &px.mul(&self.im, &self.im),
        )
    }

    pub fn abs(&self, px: &Precision) -> BigFloat {
        px.sqrt(&self.abs2(px))
    }

    pub fn recip(&self, px: &Precision) -> Self {
        let d = self.abs2(px);
        ComplexValue::new(px.div(&self.re, &d), px.div(&self.im.neg(), &d))
    }

    pub fn div(&self, o: &ComplexValue, px: &Precision) -> Self {
        let d = o.abs2(px);
        let num = self.mul(&ComplexValue::new(o.re.clone(), o.im.neg()), px);
        ComplexValue::new(px.div(&num.re, &d), px.div(&num.im, &d))
    }

    /// Integer power, binary; negative exponents through the reciprocal.
    pub fn powi(&self, n: i64, px: &Precision) -> Self {
        if n < 0 {
            return self.powi(-n, px).recip(px);
        }
        let mut base = self.clone();
        let mut acc = ComplexValue::from_f64(1.0, 0.0, px);
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, px);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, px);
            }
        }
        acc
    }

    /// `e^z = e^{Re z}(cos Im z + i·sin Im z)`.
    pub fn exp(&self, px: &Precision) -> Self {
        let r = px.exp(&self.re);
        ComplexValue::new(px.mul(&r, &px.cos(&self.im)), px.mul(&r, &px.sin(&self.im)))
    }

    pub fn to_f64_parts(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }

    /// `|self - o|` as an f64, for tolerance checks.
    pub fn dist_f64(&self, o: &ComplexValue, px: &Precision) -> f64 {
        to_f64(&self.sub(o, px).abs(px))
    }
}

/// `cot w` for `w` off the real axis (and on it, away from the poles `kπ`).
///
/// Uses `cot w = i(t+1)/(t-1)` with `t = e^{2iw}`, flipping `w → -w` first
/// when `Im w < 0` so that `|t| ≤ 1` and the exponential cannot overflow.
/// Returns `None` within rounding distance of a pole.
pub(crate) fn cot(w: &ComplexValue, px: &Precision) -> Option<ComplexValue> {
    if w.im.is_negative() {
        return cot(&w.neg(), px).map(|v| v.neg());
    }
    // t = e^{2iw} = e^{-2 Im w}·e^{2i Re w}, |t| ≤ 1.
    let two = px.from_i64(2);
    let t = ComplexValue::new(
        px.mul(&w.im.neg(), &two),
        px.mul(&w.re, &two),
    )
    .exp(px);
    let one = ComplexValue::from_f64(1.0, 0.0, px);
    let den = t.sub(&one, px);
    if to_f64(&den.abs2(px)) < 1e-40 {
        return None;
    }
    let num = t.add(&one, px);
    // i·num/den
    let q = num.div(&den, px);
    Some(ComplexValue::new(q.im.neg(), q.re))
}

/// `coth v`, sign-flipped onto `Re v ≥ 0` so `t = e^{-2v}` stays bounded:
/// `coth v = (1+t)/(1-t)`. Returns `None` within rounding distance of a
/// pole (`v ≈ kπi`).
pub(crate) fn coth(v: &ComplexValue, px: &Precision) -> Option<ComplexValue> {
    if v.re.is_negative() {
        return coth(&v.neg(), px).map(|x| x.neg());
    }
    let two = px.from_i64(2);
    let t = ComplexValue::new(
        px.mul(&v.re.neg(), &two),
        px.mul(&v.im.neg(), &two),
    )
    .exp(px);
    let one = ComplexValue::from_f64(1.0, 0.0, px);
    let den = one.sub(&t, px);
    if to_f64(&den.abs2(px)) < 1e-40 {
        return None;
    }
    Some(one.add(&t, px).div(&den, px))
}
