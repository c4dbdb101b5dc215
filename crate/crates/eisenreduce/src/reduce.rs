//! The reduction engine: partial-fraction decomposition of a double pole,
//! the depth-2 closed form, star/full conversions, and the recursion that
//! collapses depth-r series to depth 1.
//!
//! Everything here is exact. The driving identity splits the inner double
//! sum of `G̃*` into its diagonal (`n_{r-1} = n_r`, which merges the last
//! two exponents) and off-diagonal part, where the partial-fraction
//! expansion turns the product of two poles into single poles whose
//! difference factors resum to zeta values — only even zeta arguments
//! survive, which is why the result stays inside `ℚ[π², τ^(-2), G_2, G_4,
//! G_6]`.

use std::collections::BTreeMap;

use num::Zero;

use crate::exact::{binomial, rat, rat_int, zeta_even, Rational};
use crate::ring::{GExpansion, Monomial, RingElement};
use crate::Error;

/// Which series a tuple of exponents names: the full sum over `m ∈ ℤ`, or
/// the starred sum restricted to `m ≠ 0`. The two differ exactly by the
/// `m = 0` row, a product of zeta values.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Full,
    Star,
}

/// The exponent signature `(2p_1, …, 2p_r)` of a series, stored as the
/// halves `p_j ≥ 1`, plus its [`Family`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IndexTuple {
    halves: Vec<u32>,
    family: Family,
}

impl IndexTuple {
    /// Build from exponent halves. Panics on an empty tuple or a zero entry.
    pub fn new(halves: &[u32], family: Family) -> Self {
        assert!(!halves.is_empty(), "index tuple must be non-empty");
        assert!(halves.iter().all(|&p| p >= 1), "exponent halves must be >= 1");
        IndexTuple {
            halves: halves.to_vec(),
            family,
        }
    }

    pub fn full(halves: &[u32]) -> Self {
        IndexTuple::new(halves, Family::Full)
    }

    pub fn star(halves: &[u32]) -> Self {
        IndexTuple::new(halves, Family::Star)
    }

    /// Build from the literal even exponents `(2p_1, …, 2p_r)`, validating
    /// that every entry is an even positive integer.
    pub fn from_even_indices(indices: &[i64], family: Family) -> Result<Self, Error> {
        if indices.is_empty() {
            return Err(Error::InvalidIndices("empty index list".into()));
        }
        let mut halves = Vec::with_capacity(indices.len());
        for &idx in indices {
            if idx < 2 || idx % 2 != 0 {
                return Err(Error::InvalidIndices(format!(
                    "indices must be even integers >= 2, got {idx}"
                )));
            }
            halves.push((idx / 2) as u32);
        }
        Ok(IndexTuple { halves, family })
    }

    pub fn halves(&self) -> &[u32] {
        &self.halves
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// The series depth `r`.
    pub fn depth(&self) -> usize {
        self.halves.len()
    }

    /// The weight `2·Σ p_j`.
    pub fn weight(&self) -> u32 {
        2 * self.halves.iter().sum::<u32>()
    }

    /// The literal even exponents.
    pub fn even_indices(&self) -> Vec<u32> {
        self.halves.iter().map(|&p| 2 * p).collect()
    }
}

/// Which of the two poles a partial-fraction term survives on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    First,
    Second,
}

/// One term of the expansion of `1/((x+c₁)^{s₁}(x+c₂)^{s₂})`:
///
/// ```text
/// sign · binom / ((c_own - c_other)^{difference_power} · (x + c_own)^k)
/// ```
///
/// where `c_own` is the pole named by `side` and `k + difference_power =
/// s₁ + s₂`.
#[derive(Clone, Debug)]
pub struct PartialFractionTerm {
    pub side: Side,
    /// Remaining exponent on the surviving pole.
    pub k: u32,
    /// `(-1)^(s_other)`.
    pub sign: i8,
    /// `C(difference_power - 1, s_other - 1)`; terms with vanishing binomial
    /// are never materialized.
    pub binom: Rational,
    /// Exponent on the pole difference `(c_own - c_other)`.
    pub difference_power: u32,
}

/// The exact partial-fraction expansion data of
/// `1/((x+c₁)^{s₁}(x+c₂)^{s₂})` over all splits `k₁ + k₂ = s₁ + s₂` with
/// `k₁, k₂ ≥ 1`, valid for any `c₁ ≠ c₂`.
pub fn partial_fraction(s1: u32, s2: u32) -> Vec<PartialFractionTerm> {
    assert!(s1 >= 1 && s2 >= 1);
    let total = s1 + s2;
    let mut terms = Vec::new();
    for k in 1..total {
        let diff = total - k;
        // Terms keeping the first pole (x+c₁)^k.
        let b1 = binomial(i64::from(diff) - 1, i64::from(s2) - 1);
        if !b1.is_zero() {
            terms.push(PartialFractionTerm {
                side: Side::First,
                k,
                sign: if s2 % 2 == 0 { 1 } else { -1 },
                binom: b1,
                difference_power: diff,
            });
        }
        // Terms keeping the second pole (x+c₂)^k.
        let b2 = binomial(i64::from(diff) - 1, i64::from(s1) - 1);
        if !b2.is_zero() {
            terms.push(PartialFractionTerm {
                side: Side::Second,
                k,
                sign: if s1 % 2 == 0 { 1 } else { -1 },
                binom: b2,
                difference_power: diff,
            });
        }
    }
    terms
}

/// `G̃*_{2p}` before normalization: the depth-1 starred series equals
/// `G_{2p} - 2ζ(2p)/τ^{2p}`.
fn star_depth1_expansion(p: u32) -> GExpansion {
    let mut e = GExpansion::zero();
    e.add_g(p, RingElement::one());
    e.add_rest(zeta_even(p).mul_term(&rat_int(-2), &Monomial::tau2(-(p as i32))));
    e
}

/// The depth-1 starred series `G̃*_{2p} = G_{2p} - 2ζ(2p)/τ^{2p}`, with
/// `G_{2p}` kept as a generator for `p ≤ 3` and normalized into
/// `ℚ[G_4, G_6]` for `p ≥ 4`.
pub fn star_depth1(p: u32) -> RingElement {
    assert!(p >= 1);
    star_depth1_expansion(p).normalize()
}

/// The `m = 0` row of the full series: `Π_j 2ζ(2p_j)/τ^{2p_j}`, the exact
/// difference between the full and starred sums.
pub fn star_correction(t: &IndexTuple) -> RingElement {
    let mut acc = RingElement::one();
    for &p in &t.halves {
        acc = acc * zeta_even(p).mul_term(&rat_int(2), &Monomial::tau2(-(p as i32)));
    }
    acc
}

/// Convert a starred-series value to the full series by adding back the
/// `m = 0` row. For depth 2 the correction is `4ζ(2p)ζ(2q)/τ^{2(p+q)}`.
pub fn star_to_full(t: &IndexTuple, x: &RingElement) -> RingElement {
    assert_eq!(t.family, Family::Star, "star_to_full expects a star tuple");
    x + &star_correction(t)
}

/// The depth-2 closed form:
///
/// ```text
/// G̃_{2p,2q} = G_{2(p+q)}
///   + Σ_{l₁+l₂=p+q} [ 2ζ(2l₂)·C(2l₂-1, 2q-1)·τ^(-2l₂) · G_{2l₁}
///                   + 2ζ(2l₁)·C(2l₁-1, 2p-1)·τ^(-2l₁) · G_{2l₂} ]
///   + (4/τ^{2(p+q)})·[ ζ(2p)ζ(2q) - ζ(2(p+q))/2
///        - Σ_{l₁+l₂=p+q} ζ(2l₁)ζ(2l₂)·(C(2l₂-1,2q-1) + C(2l₁-1,2p-1)) ]
/// ```
///
/// fully normalized into the generators `{π², τ², G_2, G_4, G_6}`.
/// Out-of-range binomials vanish, which is what truncates the sums.
pub fn reduce_depth2(p: u32, q: u32) -> RingElement {
    assert!(p >= 1 && q >= 1);
    let s = p + q;
    let mut exp = GExpansion::zero();
    exp.add_g(s, RingElement::one());

    for l2 in 1..s {
        let l1 = s - l2;
        let b_q = binomial(2 * i64::from(l2) - 1, 2 * i64::from(q) - 1);
        if !b_q.is_zero() {
            exp.add_g(
                l1,
                zeta_even(l2).mul_term(&(rat_int(2) * &b_q), &Monomial::tau2(-(l2 as i32))),
            );
        }
        let b_p = binomial(2 * i64::from(l1) - 1, 2 * i64::from(p) - 1);
        if !b_p.is_zero() {
            exp.add_g(
                l2,
                zeta_even(l1).mul_term(&(rat_int(2) * &b_p), &Monomial::tau2(-(l1 as i32))),
            );
        }
    }

    let mut bracket = &zeta_even(p) * &zeta_even(q);
    bracket -= &zeta_even(s).scale(&rat(1, 2));
    for l2 in 1..s {
        let l1 = s - l2;
        let b = binomial(2 * i64::from(l2) - 1, 2 * i64::from(q) - 1)
            + binomial(2 * i64::from(l1) - 1, 2 * i64::from(p) - 1);
        if !b.is_zero() {
            bracket -= &(&zeta_even(l1) * &zeta_even(l2)).scale(&b);
        }
    }
    exp.add_rest(bracket.mul_term(&rat_int(4), &Monomial::tau2(-(s as i32))));

    exp.normalize()
}

/// One step of the depth recursion on a starred tuple of depth `r ≥ 2`,
/// splitting on the last two indices:
///
/// ```text
/// G̃*_{2p₁,…,2p_r} = G̃*_{2p₁,…,2p_{r-2},2(p_{r-1}+p_r)}
///   + Σ_{l₁+l₂=p_{r-1}+p_r} 2ζ(2l₂)·C(2l₂-1, 2p_r-1)·τ^(-2l₂) · G̃*_{2p₁,…,2p_{r-2},2l₁}
///   + Σ_{l₁+l₂=p_{r-1}+p_r} 2ζ(2l₁)·C(2l₁-1, 2p_{r-1}-1)·τ^(-2l₁) · G̃*_{2p₁,…,2p_{r-2},2l₂}
/// ```
///
/// Tuples that coincide are merged, so the result is a canonical list of
/// depth-(r-1) starred tuples with ring-element weights. Panics on depth 1.
pub fn star_recursion_step(t: &IndexTuple) -> Vec<(IndexTuple, RingElement)> {
    assert_eq!(t.family, Family::Star, "recursion acts on starred tuples");
    step_raw(&t.halves)
        .into_iter()
        .map(|(halves, w)| {
            (
                IndexTuple {
                    halves,
                    family: Family::Star,
                },
                w,
            )
        })
        .collect()
}

fn step_raw(halves: &[u32]) -> Vec<(Vec<u32>, RingElement)> {
    let r = halves.len();
    assert!(r >= 2, "recursion step requires depth >= 2");
    let prefix = &halves[..r - 2];
    let (p_before, p_last) = (halves[r - 2], halves[r - 1]);
    let s = p_before + p_last;

    let mut out: BTreeMap<Vec<u32>, RingElement> = BTreeMap::new();
    let mut push = |last: u32, w: RingElement| {
        let mut key = prefix.to_vec();
        key.push(last);
        let slot = out.entry(key).or_default();
        *slot += w;
    };

    push(s, RingElement::one());
    for l2 in 1..s {
        let l1 = s - l2;
        let b_last = binomial(2 * i64::from(l2) - 1, 2 * i64::from(p_last) - 1);
        if !b_last.is_zero() {
            push(
                l1,
                zeta_even(l2).mul_term(&(rat_int(2) * &b_last), &Monomial::tau2(-(l2 as i32))),
            );
        }
        let b_before = binomial(2 * i64::from(l1) - 1, 2 * i64::from(p_before) - 1);
        if !b_before.is_zero() {
            push(
                l2,
                zeta_even(l1).mul_term(&(rat_int(2) * &b_before), &Monomial::tau2(-(l1 as i32))),
            );
        }
    }

    out.into_iter().filter(|(_, w)| !w.is_zero()).collect()
}

/// The starred series reduced all the way down, still in expansion form
/// (higher `G_{2l}` symbols unresolved).
fn star_reduce(halves: &[u32]) -> GExpansion {
    let mut frontier: BTreeMap<Vec<u32>, RingElement> = BTreeMap::new();
    frontier.insert(halves.to_vec(), RingElement::one());
    let mut out = GExpansion::zero();

    while !frontier.is_empty() {
        let mut next: BTreeMap<Vec<u32>, RingElement> = BTreeMap::new();
        for (tuple, weight) in frontier {
            if tuple.len() == 1 {
                out.add(star_depth1_expansion(tuple[0]).scale_ring(&weight));
            } else {
                for (sub, w) in step_raw(&tuple) {
                    let slot = next.entry(sub).or_default();
                    *slot += &w * &weight;
                }
            }
        }
        frontier = next;
    }
    out
}

/// Reduce a series of any depth to its closed form in
/// `ℚ[π², τ^(-2), G_2, G_4, G_6]`.
///
/// A full tuple of depth 1 is the Eisenstein series itself; deeper tuples
/// go through the star recursion, are resolved at depth 1, normalized, and
/// (for the full family) corrected by the `m = 0` row. On a starred tuple
/// the correction is skipped and the starred value is returned.
pub fn reduce_multi(t: &IndexTuple) -> RingElement {
    let star_value = if t.depth() == 1 {
        star_depth1_expansion(t.halves[0])
    } else {
        star_reduce(&t.halves)
    };
    let reduced = star_value.normalize();
    match t.family {
        Family::Star => reduced,
        Family::Full => reduced + star_correction(t),
    }
}
