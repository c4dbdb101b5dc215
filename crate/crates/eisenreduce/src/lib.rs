//! Exact reduction of multiple Eisenstein-type lattice series.
//!
//! For positive integers `p_1, ..., p_r` and `τ` in the upper half-plane, the
//! multiple series
//!
//! ```text
//!                   ∞      ∞          r
//! G̃_{2p_1,...,2p_r}(τ) =  Σ      Σ   ...   Π  (m + n_j τ)^(-2p_j)
//!                  m=-∞  n_1=-∞       j=1
//! ```
//!
//! (iterated sums, `m` outermost) converges conditionally and, remarkably,
//! collapses to a polynomial with rational coefficients in `π²`, `τ^(-2)` and
//! the classical Eisenstein series `G_2`, `G_4`, `G_6`. This crate computes
//! that polynomial *exactly*:
//!
//! * [`exact`] — rationals, Bernoulli numbers, even zeta values `ζ(2l)` as
//!   rational multiples of `π^(2l)`.
//! * [`ring`] — the target ring `ℚ[π², τ^(±2), G_2, G_4, G_6]`: canonical
//!   monomials, weight grading, normalization of `G_8, G_10, ...` down to
//!   `G_4, G_6`, and exact specialization at `τ = i` in terms of `π` and the
//!   lemniscate constant `ϖ`.
//! * [`reduce`] — the reduction algorithm itself: partial fractions, the
//!   depth-2 closed form, and the recursion on the starred series `G̃*`
//!   (the `m ≠ 0` part) that peels off one depth at a time.
//! * [`hyperbolic`] — the layer that turns those reductions into closed
//!   forms for hyperbolic cotangent sums `𝔠^⟨2k⟩` and for classical series
//!   like `Σ_{m≠0} coth(mπ)/m^(4p+3)`.
//! * [`numerics`] — an independent arbitrary-precision oracle: it evaluates
//!   the defining series by brute force (with exact closed forms for the
//!   inner one-dimensional lattice sums) so every symbolic identity can be
//!   checked numerically at concrete `τ`.
//! * [`render`] — text / LaTeX / JSON output and JSON parsing.
//! * [`cli`] — the `eisenreduce` command-line front end.
//!
//! The examples directory exercises each layer; start with
//! `examples/depth_two.rs`.

pub mod cli;
pub mod exact;
pub mod hyperbolic;
pub mod numerics;
pub mod reduce;
pub mod render;
pub mod ring;

pub use exact::{bernoulli, binomial, zeta_even, Rational};
pub use hyperbolic::{cauchy_closed_form, coth_reduce, CothIndex};
pub use reduce::{reduce_depth2, reduce_multi, Family, IndexTuple};
pub use ring::{ClosedFormValue, Monomial, RingElement};

/// Errors surfaced by the numeric layer and by input validation.
///
/// The purely symbolic layers (`exact`, `ring`, `reduce`, `hyperbolic`)
/// treat contract violations — an even-index tuple with a zero entry, say —
/// as programmer errors and panic; everything that can fail on well-formed
/// but unusable *runtime* input (a `τ` below the real axis, a truncation
/// bound of zero, a cotangent evaluated at a pole) reports through this type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Series indices must be even positive integers.
    #[error("invalid indices: {0}")]
    InvalidIndices(String),

    /// Evaluation points must satisfy `Im τ > 0`.
    #[error("tau must lie in the upper half-plane (Im tau > 0), got {0}")]
    NotInUpperHalfPlane(String),

    /// Truncation bounds must be at least 1.
    #[error("truncation bound must be >= 1, got {0}")]
    InvalidTruncation(i64),

    /// The inner lattice sum `Σ_l (m+lτ)^(-2p)` requires `m ≠ 0`: at `m = 0`
    /// the `l = 0` term is singular (that row is handled symbolically as a
    /// product of zeta values instead).
    #[error("inner lattice sum requires m != 0")]
    ZeroRow,

    /// A trigonometric/hyperbolic kernel was evaluated too close to a pole.
    #[error("cotangent pole encountered at lattice point m={m}, n={n}")]
    PoleEncountered { m: i64, n: i64 },

    /// Exact closed-form specialization is only implemented at `τ = i`.
    #[error("unsupported specialization point: {0}")]
    UnsupportedPoint(String),

    /// Malformed serialized input (JSON).
    #[error("parse error: {0}")]
    Parse(String),

    /// A requested output file could not be written.
    #[error("io error: {0}")]
    Io(String),
}
