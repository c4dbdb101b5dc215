//! Exact rational arithmetic and the classical constants every reduction
//! rests on: Bernoulli numbers, binomial coefficients with the vanishing
//! convention, and even zeta values `ζ(2l)` as rational multiples of `π^(2l)`.

use std::sync::Mutex;

use num::bigint::BigInt;
use num::{One, Zero};

use crate::ring::{Monomial, RingElement};

/// Exact arbitrary-precision rational scalar.
///
/// `num`'s `BigRational` keeps values in lowest terms with a positive
/// denominator, which is exactly the canonical form needed here; no rounding
/// ever occurs in this type.
pub type Rational = num::BigRational;

/// Shorthand for the rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// `n!` as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// The Bernoulli number `B_n`, under the convention `B_1 = -1/2`.
///
/// Computed by the defining recurrence `Σ_{j=0}^{n} C(n+1,j)·B_j = 0` and
/// memoized; the table only ever grows, so previously returned values never
/// change.
pub fn bernoulli(n: u32) -> Rational {
    let mut table = BERNOULLI.lock().unwrap();
    while table.len() <= n as usize {
        let m = table.len();
        let next = if m == 0 {
            Rational::one()
        } else {
            let mut acc = Rational::zero();
            for (j, b) in table.iter().enumerate() {
                acc += binomial(m as i64 + 1, j as i64) * b;
            }
            -acc / rat_int(m as i64 + 1)
        };
        table.push(next);
    }
    table[n as usize].clone()
}

/// The binomial coefficient `C(n,k)`, with `C(n,k) = 0` whenever `k < 0` or
/// `k > n`.
///
/// The zero extension is load-bearing: the reduction formulas sum over
/// unrestricted index splits and rely on out-of-range binomials vanishing.
pub fn binomial(n: i64, k: i64) -> Rational {
    assert!(n >= 0, "binomial requires n >= 0, got {n}");
    if k < 0 || k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // Exact at every step: the running product is C(n-k+i, i) * i! / i!.
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    Rational::from(acc)
}

/// The rational `r` with `ζ(2l) = r·π^(2l)`, by Euler's formula
/// `ζ(2l) = (-1)^(l+1) · B_{2l} · (2π)^(2l) / (2·(2l)!)`.
pub fn zeta_even_coeff(l: u32) -> Rational {
    assert!(l >= 1, "zeta_even requires l >= 1");
    let sign = if l % 2 == 1 { 1 } else { -1 };
    let two_pow = BigInt::from(2u32).pow(2 * l);
    bernoulli(2 * l) * rat_int(sign) * Rational::new(two_pow, 2 * factorial(2 * l))
}

/// `ζ(2l)` as a ring element: a rational multiple of the monomial `π^(2l)`.
pub fn zeta_even(l: u32) -> RingElement {
    RingElement::from_term(zeta_even_coeff(l), Monomial::pi2(l as i32))
}

/// The parity-filtered zeta value: `ζ(k)` for even `k`, `0` for odd `k`.
///
/// Only even arguments carry a closed form in `π`; the reduction sums are
/// arranged so that odd-argument terms always cancel, and this filter is how
/// that cancellation is expressed.
pub fn zeta_dagger(k: u32) -> RingElement {
    assert!(k >= 1, "zeta_dagger requires k >= 1");
    if k % 2 == 0 {
        zeta_even(k / 2)
    } else {
        RingElement::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bernoulli_base_cases() {
        assert_eq!(bernoulli(0), rat_int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_odd_vanish() {
        for n in (3..=61).step_by(2) {
            assert!(bernoulli(n).is_zero(), "B_{n} should vanish");
        }
    }

    #[test]
    fn bernoulli_recurrence_up_to_60() {
        for n in 1..=60i64 {
            let mut acc = Rational::zero();
            for j in 0..=n {
                acc += binomial(n + 1, j) * bernoulli(j as u32);
            }
            assert!(acc.is_zero(), "recurrence fails at n={n}");
        }
    }

    #[test]
    fn binomial_values_and_zero_extension() {
        assert_eq!(binomial(3, 1), rat_int(3));
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(52, 5), rat_int(2_598_960));
        assert_eq!(binomial(1, 3), Rational::zero());
        assert_eq!(binomial(5, -1), Rational::zero());
        assert_eq!(binomial(0, 0), rat_int(1));
        // The split l2=1, q=2 must contribute nothing: C(1,3) = 0.
        assert_eq!(binomial(2 * 1 - 1, 2 * 2 - 1), Rational::zero());
    }

    #[test]
    fn binomial_symmetry() {
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
            }
        }
    }

    #[test]
    fn zeta_even_small_values() {
        assert_eq!(zeta_even_coeff(1), rat(1, 6));
        assert_eq!(zeta_even_coeff(2), rat(1, 90));
        assert_eq!(zeta_even_coeff(3), rat(1, 945));
        assert_eq!(zeta_even_coeff(4), rat(1, 9450));
        assert_eq!(
            zeta_even(1),
            RingElement::from_term(rat(1, 6), Monomial::pi2(1))
        );
    }

    #[test]
    fn zeta_dagger_parity() {
        assert!(zeta_dagger(3).is_zero());
        assert!(zeta_dagger(7).is_zero());
        assert_eq!(zeta_dagger(2), zeta_even(1));
        assert_eq!(zeta_dagger(4), zeta_even(2));
        assert_eq!(zeta_dagger(10), zeta_even(5));
    }

    /// The coefficient of `zeta_even(l)` against the brute-force Dirichlet
    /// partial sum Σ_{n≤N} n^(-2l), with the Euler–Maclaurin tail
    /// `N^(1-s)/(s-1) - N^(-s)/2 + s·N^(-s-1)/12` so the truncated sum is a
    /// meaningful 10⁻⁹-level reference even at s = 2.
    #[test]
    fn zeta_even_matches_partial_sums() {
        let pi = std::f64::consts::PI;
        for l in 1..=12u32 {
            let s = 2.0 * f64::from(l);
            let n_max = 1_000_000u64;
            let mut sum = 0.0f64;
            // Ascending magnitude: small terms first.
            for n in (1..=n_max).rev() {
                sum += (n as f64).powf(-s);
            }
            let nf = n_max as f64;
            sum += nf.powf(1.0 - s) / (s - 1.0) - nf.powf(-s) / 2.0
                + s * nf.powf(-s - 1.0) / 12.0;
            let coeff = zeta_even_coeff(l);
            let exact = rational_to_f64(&coeff) * pi.powi(2 * l as i32);
            let rel = ((sum - exact) / exact).abs();
            assert!(rel < 1e-9, "l={l}: rel error {rel:.3e}");
        }
    }

    fn rational_to_f64(q: &Rational) -> f64 {
        use num::ToPrimitive;
        q.to_f64().expect("fits in f64 for small test values")
    }
}
