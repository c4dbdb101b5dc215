//! The target algebra of every reduction: the sparse Laurent-monomial ring
//! `ℚ[π², τ^(±2), G_2, G_4, G_6]`, together with its weight grading, the
//! normalization of higher Eisenstein series into `ℚ[G_4, G_6]`, and the
//! exact specialization at `τ = i` in terms of `π` and the lemniscate
//! constant `ϖ`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Mutex;

use num::{One, Zero};

use crate::exact::{rat, rat_int, Rational};

/// A monomial `π^(2a) · τ^(2b) · G_2^c · G_4^d · G_6^e`.
///
/// `a` and `b` may be negative (the ring is Laurent in `π²` and `τ²`); the
/// Eisenstein exponents are non-negative. The grading assigns weight
/// `2a + 2c + 4d + 6e`, with `τ` weightless; reductions of a series with
/// exponents summing to `w` land in the single weight class `w`, with
/// `a + b = 0` in every monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    /// Exponent of `π²`.
    pub a: i32,
    /// Exponent of `τ²`.
    pub b: i32,
    /// Exponent of `G_2`.
    pub c: u32,
    /// Exponent of `G_4`.
    pub d: u32,
    /// Exponent of `G_6`.
    pub e: u32,
}

impl Monomial {
    pub fn new(a: i32, b: i32, c: u32, d: u32, e: u32) -> Self {
        Monomial { a, b, c, d, e }
    }

    /// The empty monomial `1`.
    pub fn one() -> Self {
        Monomial::new(0, 0, 0, 0, 0)
    }

    /// `π^(2a)`.
    pub fn pi2(a: i32) -> Self {
        Monomial::new(a, 0, 0, 0, 0)
    }

    /// `τ^(2b)`.
    pub fn tau2(b: i32) -> Self {
        Monomial::new(0, b, 0, 0, 0)
    }

    pub fn g2() -> Self {
        Monomial::new(0, 0, 1, 0, 0)
    }

    pub fn g4() -> Self {
        Monomial::new(0, 0, 0, 1, 0)
    }

    pub fn g6() -> Self {
        Monomial::new(0, 0, 0, 0, 1)
    }

    /// Componentwise exponent sum.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.a + other.a,
            self.b + other.b,
            self.c + other.c,
            self.d + other.d,
            self.e + other.e,
        )
    }

    /// Grading weight `2a + 2c + 4d + 6e` (τ carries weight 0).
    pub fn weight(&self) -> i64 {
        2 * i64::from(self.a)
            + 2 * i64::from(self.c)
            + 4 * i64::from(self.d)
            + 6 * i64::from(self.e)
    }

    /// The Eisenstein part of the weight, `2c + 4d + 6e` — the primary sort
    /// key, so terms print from the highest-weight `G`-factor down to the
    /// constant.
    pub fn g_weight(&self) -> u32 {
        2 * self.c + 4 * self.d + 6 * self.e
    }

    fn sort_key(&self) -> (u32, u32, u32, u32, i32, i32) {
        (self.g_weight(), self.c, self.d, self.e, self.a, self.b)
    }
}

// Ascending on the sort key; canonical (display) order is the reverse, so
// iterating a BTreeMap backwards walks terms from the highest-weight
// G-factor down to the constant, exactly how the closed forms are
// conventionally written.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A `ℚ`-linear combination of [`Monomial`]s: the closed-form value of a
/// reduced series.
///
/// Zero coefficients are never stored, so equality is structural equality of
/// the canonical form.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct RingElement {
    terms: BTreeMap<Monomial, Rational>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn one() -> Self {
        RingElement::from_rational(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_term(coeff: Rational, m: Monomial) -> Self {
        let mut x = RingElement::zero();
        x.add_term(m, coeff);
        x
    }

    pub fn from_rational(q: Rational) -> Self {
        RingElement::from_term(q, Monomial::one())
    }

    /// Convenience: the integer rational `n` as an element.
    pub fn from_int(n: i64) -> Self {
        RingElement::from_rational(rat_int(n))
    }

    /// Number of (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending internal order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical display order (highest G-weight first, constant
    /// last).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    /// The coefficient of `m` (zero if absent).
    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Add `coeff·m`, merging like terms and dropping exact zeros.
    pub fn add_term(&mut self, m: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiply by the scalar `q`.
    pub fn scale(&self, q: &Rational) -> RingElement {
        if q.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    /// Multiply by `coeff·m` in one pass.
    pub fn mul_term(&self, coeff: &Rational, m: &Monomial) -> RingElement {
        if coeff.is_zero() {
            return RingElement::zero();
        }
        RingElement {
            terms: self
                .terms
                .iter()
                .map(|(mm, c)| (mm.mul(m), c * coeff))
                .collect(),
        }
    }

    /// `self^n` by repeated multiplication.
    pub fn pow(&self, n: u32) -> RingElement {
        let mut acc = RingElement::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Partition the terms by grading weight. Re-adding the parts
    /// reconstructs the element exactly.
    pub fn weight_decomposition(&self) -> BTreeMap<i64, RingElement> {
        let mut parts: BTreeMap<i64, RingElement> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.weight()).or_default().add_term(*m, c.clone());
        }
        parts
    }

    /// Exact specialization at `τ = i`, where `τ² = -1`, `G_2(i) = -π`,
    /// `G_4(i) = ϖ⁴/15` and `G_6(i) = 0`.
    ///
    /// Odd π-powers appear through `G_2 → -π`; the `(-1)^b` sign from
    /// `τ² → -1` is applied per monomial.
    pub fn specialize_i(&self) -> ClosedFormValue {
        let mut out = ClosedFormValue::zero();
        for (m, q) in &self.terms {
            if m.e > 0 {
                continue; // G_6(i) = 0 kills the term
            }
            let mut coeff = q.clone();
            if (m.b.rem_euclid(2) + m.c.rem_euclid(2) as i32) % 2 == 1 {
                coeff = -coeff;
            }
            if m.d > 0 {
                coeff /= rat_int(15).pow(m.d as i32);
            }
            out.add_term(2 * m.a + m.c as i32, 4 * m.d, coeff);
        }
        out
    }
}

impl AddAssign<&RingElement> for RingElement {
    fn add_assign(&mut self, rhs: &RingElement) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign<RingElement> for RingElement {
    fn add_assign(&mut self, rhs: RingElement) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&RingElement> for RingElement {
    fn sub_assign(&mut self, rhs: &RingElement) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(mut self, rhs: RingElement) -> RingElement {
        self += rhs;
        self
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(mut self, rhs: RingElement) -> RingElement {
        self -= &rhs;
        self
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        -&self
    }
}

impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    fn mul(self, rhs: RingElement) -> RingElement {
        &self * &rhs
    }
}

impl std::iter::Sum for RingElement {
    fn sum<I: Iterator<Item = RingElement>>(iter: I) -> RingElement {
        let mut acc = RingElement::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

static HIGHER_G: Mutex<BTreeMap<u32, RingElement>> = Mutex::new(BTreeMap::new());

/// `G_{2k}` as an element of `ℚ[G_4, G_6]`, homogeneous of weight `2k`.
///
/// For `k = 2, 3` this is the generator itself. For `k ≥ 4` the classical
/// recursion
///
/// ```text
/// G_{2k} = 3/((2k+1)(2k-1)(k-3)) · Σ_{j=2}^{k-2} (2j-1)(2k-2j-1)·G_{2j}·G_{2k-2j}
/// ```
///
/// expresses everything in terms of `G_4` and `G_6`; the first instances are
/// `G_8 = (3/7)G_4²` and `G_10 = (5/11)G_4G_6`.
///
/// Panics for `k ≤ 1`: `G_2` is not in `ℚ[G_4, G_6]` and must stay a
/// generator.
#[allow(non_snake_case)]
pub fn normalize_higher_G(k: u32) -> RingElement {
    assert!(k >= 2, "G_2 (k=1) is a generator, not normalizable");
    match k {
        2 => return RingElement::from_term(Rational::one(), Monomial::g4()),
        3 => return RingElement::from_term(Rational::one(), Monomial::g6()),
        _ => {}
    }
    if let Some(hit) = HIGHER_G.lock().unwrap().get(&k) {
        return hit.clone();
    }
    // Compute outside the lock: the recursion re-enters this function.
    let kk = i64::from(k);
    let front = rat(3, (2 * kk + 1) * (2 * kk - 1) * (kk - 3));
    let mut acc = RingElement::zero();
    for j in 2..=(k - 2) {
        let jj = i64::from(j);
        let w = rat_int((2 * jj - 1) * (2 * (kk - jj) - 1));
        acc += (normalize_higher_G(j) * normalize_higher_G(k - j)).scale(&w);
    }
    let out = acc.scale(&front);
    HIGHER_G.lock().unwrap().insert(k, out.clone());
    out
}

/// A reduction intermediate: a linear combination `Σ_l coeff_l · G_{2l} +
/// rest`, with [`RingElement`] coefficients and arbitrary `l ≥ 1`.
///
/// Higher Eisenstein series never become ring generators; they live here
/// transiently until [`GExpansion::normalize`] eliminates every `G_{2l}`
/// with `l ≥ 4` through [`normalize_higher_G`].
#[derive(Clone, Default, Debug)]
pub struct GExpansion {
    g: BTreeMap<u32, RingElement>,
    rest: RingElement,
}

impl GExpansion {
    pub fn zero() -> Self {
        GExpansion::default()
    }

    /// Add `coeff · G_{2l}`.
    pub fn add_g(&mut self, l: u32, coeff: RingElement) {
        assert!(l >= 1);
        let slot = self.g.entry(l).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.g.remove(&l);
        }
    }

    /// Add a generator-free (or already-normalized) part.
    pub fn add_rest(&mut self, x: RingElement) {
        self.rest += x;
    }

    pub fn add(&mut self, other: GExpansion) {
        for (l, coeff) in other.g {
            self.add_g(l, coeff);
        }
        self.rest += other.rest;
    }

    /// Multiply the whole expansion by a ring element.
    pub fn scale_ring(&self, w: &RingElement) -> GExpansion {
        GExpansion {
            g: self.g.iter().map(|(l, c)| (*l, c * w)).collect(),
            rest: &self.rest * w,
        }
    }

    /// Resolve every `G_{2l}` symbol into the generators `G_2, G_4, G_6`,
    /// producing a canonical ring element.
    pub fn normalize(&self) -> RingElement {
        let mut out = self.rest.clone();
        for (l, coeff) in &self.g {
            let g = match l {
                1 => RingElement::from_term(Rational::one(), Monomial::g2()),
                _ => normalize_higher_G(*l),
            };
            out += coeff * &g;
        }
        out
    }
}

/// An exact value in `ℚ[π^(±1), ϖ]`: the result of specializing a reduction
/// at `τ = i`. Keys are `(y, x)` for the term `coeff·π^x·ϖ^y`; `y` is always
/// a multiple of 4 for values coming from the even-index series.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct ClosedFormValue {
    terms: BTreeMap<(u32, i32), Rational>,
}

impl ClosedFormValue {
    pub fn zero() -> Self {
        ClosedFormValue::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_term(coeff: Rational, x: i32, y: u32) -> Self {
        let mut v = ClosedFormValue::zero();
        v.add_term(x, y, coeff);
        v
    }

    /// Add `coeff·π^x·ϖ^y`.
    pub fn add_term(&mut self, x: i32, y: u32, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((y, x)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(x, y, coeff)` in display order: descending ϖ-power, then
    /// descending π-power.
    pub fn iter_desc(&self) -> impl Iterator<Item = (i32, u32, &Rational)> {
        self.terms.iter().rev().map(|((y, x), c)| (*x, *y, c))
    }

    /// The coefficient of `π^x·ϖ^y` (zero if absent).
    pub fn coefficient(&self, x: i32, y: u32) -> Rational {
        self.terms
            .get(&(y, x))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

impl AddAssign<&ClosedFormValue> for ClosedFormValue {
    fn add_assign(&mut self, rhs: &ClosedFormValue) {
        for ((y, x), c) in &rhs.terms {
            self.add_term(*x, *y, c.clone());
        }
    }
}

impl Add for &ClosedFormValue {
    type Output = ClosedFormValue;
    fn add(self, rhs: &ClosedFormValue) -> ClosedFormValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &ClosedFormValue {
    type Output = ClosedFormValue;
    fn neg(self) -> ClosedFormValue {
        ClosedFormValue {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, -c.clone()))
                .collect(),
        }
    }
}

impl Sub for &ClosedFormValue {
    type Output = ClosedFormValue;
    fn sub(self, rhs: &ClosedFormValue) -> ClosedFormValue {
        self + &(-rhs)
    }
}

impl Mul for &ClosedFormValue {
    type Output = ClosedFormValue;
    fn mul(self, rhs: &ClosedFormValue) -> ClosedFormValue {
        let mut out = ClosedFormValue::zero();
        for ((y1, x1), c1) in &self.terms {
            for ((y2, x2), c2) in &rhs.terms {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }
}
