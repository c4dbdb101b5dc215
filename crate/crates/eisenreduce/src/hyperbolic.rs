//! Series with hyperbolic kernels.
//!
//! The multiple cotangent series
//!
//! ```text
//! 𝔠_r^⟨2k⟩(2p_1,…,2p_r; τ) = Σ_{m≠0} Σ_{n_1,…,n_r} coth^{2k}((m+n_rτ)πi/τ) · Π_j (m+n_jτ)^(-2p_j)
//! ```
//!
//! reduces to the same ring as the plain series: `coth² = 1 + 1/sinh²`
//! binomially expands `coth^{2k}` into inverse sinh powers, and each
//! `1/sinh^{2ν}(mπi/τ)` is itself a finite combination of one-dimensional
//! lattice sums `Σ_l (m+lτ)^(-2j)` with coefficients `α(ν, 2j-1)` coming
//! from the polynomial `X·Π_{l=1}^{ν-1}(X-l)(X+l)`. Summing over `m` turns
//! those lattice sums into starred series of one extra depth, and the
//! resulting linear system for the `𝔠^⟨2μ⟩` is triangular with unit
//! diagonal — solved here bottom-up.
//!
//! The same coefficients give the classical even-weight closed form for
//! `Σ_{m≠0} coth(mπ)/m^{4p+3}` as a rational multiple of `π^{4p+3}`.

use num::bigint::BigInt;
use num::{One, Zero};

use crate::exact::{bernoulli, binomial, factorial, rat_int, Rational};
use crate::reduce::{reduce_multi, IndexTuple};
use crate::ring::{ClosedFormValue, Monomial, RingElement};
use crate::Error;

/// The coefficients `α(n,k)` of `X·Π_{l=1}^{n-1}(X-l)(X+l) = Σ_k α(n,k)X^k`
/// for one fixed `n`, stored densely over the odd powers `k = 1, 3, …,
/// 2n-1` (even powers vanish identically).
#[derive(Clone, Debug)]
pub struct AlphaTable {
    n: u32,
    /// `odd[j] = α(n, 2j+1)`.
    odd: Vec<BigInt>,
}

impl AlphaTable {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        // Expand Π_{l=1}^{n-1}(X² - l²) in Y = X²; the final X shifts every
        // power up by one, landing on the odd exponents.
        let mut coeffs = vec![BigInt::one()];
        for l in 1..n {
            let l2 = BigInt::from(u64::from(l) * u64::from(l));
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] -= c * &l2;
                next[i + 1] += c;
            }
            coeffs = next;
        }
        AlphaTable { n, odd: coeffs }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `α(n,k)`: zero outside `[1, 2n-1]` and for even `k`.
    pub fn get(&self, k: i64) -> BigInt {
        if k < 1 || k > i64::from(2 * self.n - 1) || k % 2 == 0 {
            return BigInt::zero();
        }
        self.odd[((k - 1) / 2) as usize].clone()
    }
}

/// `α(n,k)` computed on the fly; see [`AlphaTable`].
pub fn alpha(n: u32, k: i64) -> BigInt {
    AlphaTable::new(n).get(k)
}

/// The exact value of `Σ_{m≠0} coth(mπ)/m^{4p+3}` as a rational multiple of
/// `π^{4p+3}`:
///
/// ```text
/// (2π)^{4p+3} · Σ_{ν=0}^{2p+2} (-1)^{ν+1} · B_{2ν}/(2ν)! · B_{4p+4-2ν}/(4p+4-2ν)!
/// ```
///
/// For `p = 0` this is `(7/90)·π³`.
pub fn cauchy_closed_form(p: u32) -> ClosedFormValue {
    let s = 4 * p + 4;
    let mut acc = Rational::zero();
    for nu in 0..=(2 * p + 2) {
        let sign = if nu % 2 == 1 { 1 } else { -1 }; // (-1)^(ν+1)
        let num = bernoulli(2 * nu) * bernoulli(s - 2 * nu) * rat_int(sign);
        acc += num / Rational::from(factorial(2 * nu) * factorial(s - 2 * nu));
    }
    acc *= Rational::from(BigInt::from(2u32).pow(4 * p + 3));
    ClosedFormValue::from_term(acc, 4 * p as i32 + 3, 0)
}

/// The finite expansion of an inverse sinh power into lattice sums:
///
/// ```text
/// 1/sinh^{2ν}(mπi/τ) = Σ_{j=1}^{ν} coeff_j · Σ_{l∈ℤ} (m+lτ)^(-2j),
/// coeff_j = [2^{2ν}/(2ν-1)!] · α(ν,2j-1) · (2j-1)! · (2πi/τ)^(-2j)
/// ```
///
/// returned as `(j, coeff_j)` pairs with `(2πi/τ)^(-2j)` expanded to the
/// real monomial `(-4)^(-j)·π^(-2j)·τ^(2j)`. The `j = ν` coefficient is
/// always present (the defining polynomial is monic).
pub fn sinh_inner_identity(nu: u32) -> Vec<(u32, RingElement)> {
    assert!(nu >= 1);
    let table = AlphaTable::new(nu);
    let scale = Rational::new(BigInt::from(2u32).pow(2 * nu).into(), factorial(2 * nu - 1));
    let mut out = Vec::new();
    for j in 1..=nu {
        let a = table.get(2 * i64::from(j) - 1);
        if a.is_zero() {
            continue;
        }
        let minus4 = Rational::new(
            BigInt::from(if j % 2 == 0 { 1 } else { -1 }),
            BigInt::from(4u32).pow(j),
        );
        let q = &scale * Rational::from(a) * Rational::from(factorial(2 * j - 1)) * minus4;
        out.push((
            j,
            RingElement::from_term(q, Monomial::new(-(j as i32), j as i32, 0, 0, 0)),
        ));
    }
    out
}

/// A cotangent-series signature: exponent halves `(p_1, …, p_r)` plus half
/// the cotangent power `k ≥ 0` (the series carries `coth^{2k}` bound to the
/// last inner index `n_r`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CothIndex {
    base: IndexTuple,
    k: u32,
}

impl CothIndex {
    pub fn new(halves: &[u32], k: u32) -> Self {
        CothIndex {
            base: IndexTuple::full(halves),
            k,
        }
    }

    /// Build from the literal even exponents and the literal coth power
    /// `2k`, validating both.
    pub fn from_even_indices(indices: &[i64], power: i64) -> Result<Self, Error> {
        let base = IndexTuple::from_even_indices(indices, crate::reduce::Family::Full)?;
        if power < 0 || power % 2 != 0 {
            return Err(Error::InvalidIndices(format!(
                "coth power must be an even integer >= 0, got {power}"
            )));
        }
        Ok(CothIndex {
            base,
            k: (power / 2) as u32,
        })
    }

    pub fn halves(&self) -> &[u32] {
        self.base.halves()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The underlying exponent tuple.
    pub fn base(&self) -> &IndexTuple {
        &self.base
    }
}

/// Exact closed form of `𝔠_r^⟨2k⟩(2p_1,…,2p_r; τ)`.
///
/// Base case `k = 0`: `coth⁰ = 1`, so the series is the starred sum
/// `G̃*_{2p⃗}` (the `m = 0` row is excluded by definition). For `k ≥ 1` the
/// binomial expansion of `1/sinh^{2k} = (coth² - 1)^k` gives
///
/// ```text
/// Σ_{μ=0}^{k} C(k,μ)(-1)^{k-μ} 𝔠^⟨2μ⟩ =
///   [2^{2k}/(2k-1)!] Σ_{h=1}^{k} α(k,2h-1)·(2h-1)!·(2πi/τ)^(-2h) · G̃*_{2p₁,…,2p_r,2h}
/// ```
///
/// — the right side is the starred series of the tuple extended by `2h`
/// (equivalently, the full series minus its `m = 0` zeta row). The system
/// is triangular with unit diagonal in `𝔠^⟨2k⟩`, so it is solved upward
/// from `μ = 0`.
pub fn coth_reduce(c: &CothIndex) -> RingElement {
    let halves = c.base.halves();
    let star = |h: &[u32]| reduce_multi(&IndexTuple::star(h));

    let mut cvals: Vec<RingElement> = vec![star(halves)];
    for kk in 1..=c.k {
        let table = AlphaTable::new(kk);
        let scale = Rational::new(BigInt::from(2u32).pow(2 * kk), factorial(2 * kk - 1));
        let mut rhs = RingElement::zero();
        for h in 1..=kk {
            let a = table.get(2 * i64::from(h) - 1);
            if a.is_zero() {
                continue;
            }
            let minus4 = Rational::new(
                BigInt::from(if h % 2 == 0 { 1 } else { -1 }),
                BigInt::from(4u32).pow(h),
            );
            let q = &scale * Rational::from(a) * Rational::from(factorial(2 * h - 1)) * minus4;
            let mono = Monomial::new(-(h as i32), h as i32, 0, 0, 0);
            let mut ext = halves.to_vec();
            ext.push(h);
            rhs += star(&ext).mul_term(&q, &mono);
        }
        for mu in 0..kk {
            let sign = if (kk - mu) % 2 == 0 { 1 } else { -1 };
            let w = binomial(i64::from(kk), i64::from(mu)) * rat_int(sign);
            rhs -= &cvals[mu as usize].scale(&w);
        }
        cvals.push(rhs);
    }
    cvals[c.k as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::reduce::reduce_depth2;

    fn elem(rows: &[(i64, i64, i32, i32, u32, u32, u32)]) -> RingElement {
        let mut x = RingElement::zero();
        for &(n, dd, a, b, c, d, e) in rows {
            x.add_term(Monomial::new(a, b, c, d, e), rat(n, dd));
        }
        x
    }

    #[test]
    fn alpha_small_tables() {
        assert_eq!(alpha(1, 1), BigInt::one());
        // X(X-1)(X+1) = X³ - X
        assert_eq!(alpha(2, 3), BigInt::one());
        assert_eq!(alpha(2, 1), BigInt::from(-1));
        // X(X²-1)(X²-4) = X⁵ - 5X³ + 4X
        assert_eq!(alpha(3, 5), BigInt::one());
        assert_eq!(alpha(3, 3), BigInt::from(-5));
        assert_eq!(alpha(3, 1), BigInt::from(4));
        // Outside the band and at even k everything vanishes.
        assert_eq!(alpha(3, 0), BigInt::zero());
        assert_eq!(alpha(3, 2), BigInt::zero());
        assert_eq!(alpha(3, 7), BigInt::zero());
        assert_eq!(alpha(3, -1), BigInt::zero());
    }

    /// Re-expand X·Π_{l=1}^{n-1}(X-l)(X+l) brute-force in X and compare
    /// every coefficient with the table, for n ≤ 10.
    #[test]
    fn alpha_expansion_matches_definition() {
        for n in 1..=10u32 {
            // poly[k] = coefficient of X^k, starting from the bare X.
            let mut poly = vec![BigInt::zero(), BigInt::one()];
            for l in 1..n {
                let ll = BigInt::from(l);
                // multiply by (X - l)
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * &ll;
                }
                poly = next;
                // multiply by (X + l)
                let mut next = vec![BigInt::zero(); poly.len() + 1];
                for (i, c) in poly.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] += c * &ll;
                }
                poly = next;
            }
            let table = AlphaTable::new(n);
            for k in 0..=(2 * i64::from(n) - 1) {
                assert_eq!(
                    poly[k as usize],
                    table.get(k),
                    "α({n},{k}) disagrees with the expanded polynomial"
                );
            }
            // Leading coefficient is 1: the polynomial is monic.
            assert_eq!(table.get(2 * i64::from(n) - 1), BigInt::one());
        }
    }

    #[test]
    fn cauchy_p0_exact() {
        let v = cauchy_closed_form(0);
        assert_eq!(v, ClosedFormValue::from_term(rat(7, 90), 3, 0));
        // One-sided sum over m ≥ 1 is half of it by m ↔ -m symmetry.
        assert_eq!(v.coefficient(3, 0) / rat_int(2), rat(7, 180));
    }

    #[test]
    fn sinh_identity_small_orders() {
        // ν=1: 1/sinh²(mπi/τ) = -τ²π⁻² · Σ_l (m+lτ)⁻²
        let one = sinh_inner_identity(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].0, 1);
        assert_eq!(
            one[0].1,
            RingElement::from_term(rat_int(-1), Monomial::new(-1, 1, 0, 0, 0))
        );

        // ν=2: (2/3)τ²π⁻² on j=1 and τ⁴π⁻⁴ on j=2.
        let two = sinh_inner_identity(2);
        assert_eq!(two.len(), 2);
        assert_eq!(
            two[0].1,
            RingElement::from_term(rat(2, 3), Monomial::new(-1, 1, 0, 0, 0))
        );
        assert_eq!(
            two[1].1,
            RingElement::from_term(rat_int(1), Monomial::new(-2, 2, 0, 0, 0))
        );

        // The leading (j = ν) coefficient never vanishes.
        for nu in 1..=8u32 {
            let terms = sinh_inner_identity(nu);
            assert_eq!(terms.last().unwrap().0, nu);
            assert!(!terms.last().unwrap().1.is_zero());
        }
    }

    #[test]
    fn coth_zero_power_is_star_series() {
        let c = CothIndex::new(&[1, 1], 0);
        let expected = reduce_depth2(1, 1)
            - RingElement::from_term(rat(1, 9), Monomial::new(2, -2, 0, 0, 0));
        assert_eq!(coth_reduce(&c), expected);
    }

    #[test]
    fn coth_2_2_closed_form() {
        // 𝔠₂^⟨2⟩(2,2;τ) = (-40π⁶ + 126τ²π⁴G₂ - 945τ⁶G₆) / (945τ⁴π²)
        let expected = elem(&[
            (2, 15, 1, -1, 1, 0, 0),   // 126/945 = 2/15
            (-1, 1, -1, 1, 0, 0, 1),   // -945/945
            (-8, 189, 2, -2, 0, 0, 0), // -40/945 = -8/189
        ]);
        assert_eq!(coth_reduce(&CothIndex::new(&[1, 1], 1)), expected);
    }

    #[test]
    fn coth_2_4_closed_form() {
        // 𝔠₂^⟨2⟩(2,4;τ) = (32π⁸ - 180τ²π⁶G₂ + 945τ⁴π⁴G₄ + 4725τ⁶π²G₆
        //                  - 14175τ⁸G₈) / (14175τ⁶π²), with G₈ = (3/7)G₄².
        let expected = elem(&[
            (-3, 7, -1, 1, 0, 2, 0),     // -14175/14175 · (3/7)G₄²
            (1, 3, 0, 0, 0, 0, 1),       // 4725/14175
            (1, 15, 1, -1, 0, 1, 0),     // 945/14175
            (-4, 315, 2, -2, 1, 0, 0),   // -180/14175
            (32, 14175, 3, -3, 0, 0, 0),
        ]);
        assert_eq!(coth_reduce(&CothIndex::new(&[1, 2], 1)), expected);
    }

    #[test]
    fn coth_symmetric_in_leading_indices() {
        // The coth binds to the last index, so only the first r-1 exponents
        // are interchangeable.
        assert_eq!(
            coth_reduce(&CothIndex::new(&[1, 2, 1], 1)),
            coth_reduce(&CothIndex::new(&[2, 1, 1], 1))
        );
    }

    #[test]
    fn coth_membership() {
        // π^{2k}·τ^{2Σp}·𝔠 lands in ℚ[τ², π², G₂, G₄, G₆]: all exponents
        // non-negative after clearing.
        let cases: &[(&[u32], u32)] = &[
            (&[1, 1], 0),
            (&[1, 1], 1),
            (&[1, 1], 2),
            (&[1, 2], 1),
            (&[2, 1], 1),
            (&[2, 2], 1),
            (&[2, 2], 2),
            (&[1, 1, 1], 1),
        ];
        for &(halves, k) in cases {
            let c = CothIndex::new(halves, k);
            let sum_p: u32 = halves.iter().sum();
            let cleared = coth_reduce(&c).mul_term(
                &rat_int(1),
                &Monomial::new(k as i32, sum_p as i32, 0, 0, 0),
            );
            for (m, _) in cleared.iter() {
                assert!(
                    m.a >= 0 && m.b >= 0,
                    "negative exponent survives clearing for ({halves:?}, k={k}): {m:?}"
                );
            }
        }
    }

    #[test]
    fn coth_power_validation() {
        assert!(CothIndex::from_even_indices(&[2, 2], 2).is_ok());
        assert!(CothIndex::from_even_indices(&[2, 2], 3).is_err());
        assert!(CothIndex::from_even_indices(&[2, 2], -2).is_err());
        assert!(CothIndex::from_even_indices(&[2, 3], 2).is_err());
        let c = CothIndex::from_even_indices(&[2, 4], 4).unwrap();
        assert_eq!(c.halves(), &[1, 2]);
        assert_eq!(c.k(), 2);
    }
}
